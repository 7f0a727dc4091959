"""Linear codes over a finite alphabet.

A code is stored by its generator list and enumerated on demand by
walking coefficient vectors over the generators in lexicographic
order, keeping the first occurrence of each word.  Fields get duals
by Gaussian elimination; modular rings fall back to a budget-gated
scan of the full ambient space.  Compositions of words, of
word/mask pairs, and of word/word/mask triples live here too, as do
their distribution tables.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .rings import RingSpec, ring_from_json, ring_to_json

__all__ = [
    "BudgetExceeded",
    "CodeFormatError",
    "LinearCode",
    "enumeration_budget",
    "load_code",
    "code_from_json",
    "code_to_json",
    "resolve_code_path",
    "permute_word",
    "weight",
    "mask_word",
    "composition",
    "jacobi_composition",
    "joint_jacobi_composition",
    "comp_table",
    "jacobi_table",
    "joint_jacobi_table",
]

DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured budget."""


class CodeFormatError(ValueError):
    """A code file or code object violates the input schema."""


def enumeration_budget() -> int:
    """Current enumeration budget; the JF_BUDGET env var overrides it."""
    raw = os.environ.get("JF_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"JF_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("JF_BUDGET must be positive")
    return value


def weight(u) -> int:
    """Hamming weight: number of nonzero symbols."""
    return sum(1 for x in u if x != 0)


def permute_word(u, sigma):
    """u^sigma with entries u[sigma[i]]; sigma is 0-based images."""
    if len(sigma) != len(u):
        raise ValueError("permutation length mismatch")
    return tuple(u[sigma[i]] for i in range(len(u)))


def mask_word(u, w):
    """Masked word: keep u_i where w_i = 0, zero elsewhere."""
    if len(u) != len(w):
        raise ValueError("length mismatch in masking")
    return tuple(x if m == 0 else 0 for x, m in zip(u, w))


def composition(ring: RingSpec, u) -> tuple[int, ...]:
    """Counts of each ring element in u, in omega-order."""
    counts = [0] * ring.order
    for x in u:
        counts[x] += 1
    return tuple(counts)


def jacobi_composition(ring: RingSpec, u, w) -> tuple[int, ...]:
    """Counts of pairs (u_i, w_i), flattened in omega-order."""
    if len(u) != len(w):
        raise ValueError("length mismatch")
    q = ring.order
    counts = [0] * (q * q)
    for x, m in zip(u, w):
        counts[x * q + m] += 1
    return tuple(counts)


def joint_jacobi_composition(ring: RingSpec, u, v, w) -> tuple[int, ...]:
    """Counts of triples (u_i, v_i, w_i), flattened in omega-order."""
    if not (len(u) == len(v) == len(w)):
        raise ValueError("length mismatch")
    q = ring.order
    counts = [0] * (q * q * q)
    for x, y, m in zip(u, v, w):
        counts[(x * q + y) * q + m] += 1
    return tuple(counts)


@dataclass(frozen=True)
class LinearCode:
    """Code spanned by generator rows over a RingSpec."""

    ring: RingSpec
    n: int
    generators: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for row in self.generators:
            if len(row) != self.n:
                raise CodeFormatError("generator rows must all have length n")
            for s in row:
                if not 0 <= s < self.ring.order:
                    raise CodeFormatError(
                        f"symbol {s} out of range for {self.ring.label()}"
                    )

    @cached_property
    def words(self) -> tuple[tuple[int, ...], ...]:
        """All codewords, first occurrence in coefficient-lex order."""
        budget = enumeration_budget()
        q = self.ring.order
        g = len(self.generators)
        if q**g > budget:
            raise BudgetExceeded(
                f"enumerating {q}^{g} coefficient vectors exceeds budget {budget}"
            )
        add = self.ring.add_table
        mul = self.ring.mul_table
        zero = (0,) * self.n
        seen = {zero}
        out = [zero]
        for coeffs in itertools.product(range(q), repeat=g):
            word = zero
            for c, gen in zip(coeffs, self.generators):
                if c:
                    word = tuple(
                        add[x][mul[c][y]] for x, y in zip(word, gen)
                    )
            if word not in seen:
                seen.add(word)
                out.append(word)
                if len(out) > budget:
                    raise BudgetExceeded(
                        f"code size exceeds enumeration budget {budget}"
                    )
        return tuple(out)

    @cached_property
    def word_set(self) -> frozenset:
        return frozenset(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, u) -> bool:
        return tuple(u) in self.word_set

    def weight_distribution(self) -> dict[int, int]:
        dist: dict[int, int] = {}
        for u in self.words:
            w = weight(u)
            dist[w] = dist.get(w, 0) + 1
        return dist

    def permute(self, sigma) -> "LinearCode":
        gens = tuple(permute_word(g, sigma) for g in self.generators)
        return LinearCode(self.ring, self.n, gens, name=self.name)

    def dual(self) -> "LinearCode":
        if self.ring.kind == "field":
            gens = _nullspace_basis(self.ring, self.n, self.generators)
        else:
            gens = _modring_dual_generators(self.ring, self.n, self.generators)
        return LinearCode(
            self.ring, self.n, gens, name=f"{self.name}_dual" if self.name else ""
        )


def _field_inverse(ring: RingSpec, a: int) -> int:
    for b in range(ring.order):
        if ring.mul_table[a][b] == 1:
            return b
    raise ArithmeticError(f"no inverse for {a}")


def _nullspace_basis(ring: RingSpec, n: int, rows):
    """Basis of the right nullspace of the generator matrix over a field."""
    mat = [list(r) for r in rows]
    add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
    pivots = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = _field_inverse(ring, mat[r][col])
        mat[r] = [mul[inv][x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = [
                    add[x][neg[mul[c][y]]] for x, y in zip(mat[i], mat[r])
                ]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = neg[mat[i][fc]]
        basis.append(tuple(vec))
    return tuple(basis)


def _modring_dual_generators(ring: RingSpec, n: int, rows):
    """Dual of a Z_k code by scanning the ambient space, budget gated."""
    budget = enumeration_budget()
    total = ring.order**n
    if total > budget:
        raise BudgetExceeded(
            f"dual over {ring.label()} needs a scan of {ring.order}^{n} words, "
            f"budget is {budget}"
        )
    dual_words = []
    for cand in itertools.product(range(ring.order), repeat=n):
        if all(ring.dot(g, cand) == 0 for g in rows):
            dual_words.append(cand)
    # greedy generating set: add words that enlarge the running span
    gens: list[tuple[int, ...]] = []
    span = {(0,) * n}
    for wrd in dual_words:
        if wrd in span:
            continue
        gens.append(wrd)
        new_span = set()
        for base in span:
            shifted = base
            for _ in range(ring.order):
                new_span.add(shifted)
                shifted = tuple(
                    ring.add_table[x][y] for x, y in zip(shifted, wrd)
                )
        span = new_span
    return tuple(gens)


# ---- distribution tables -------------------------------------------------


def comp_table(code: LinearCode) -> dict[tuple[int, ...], int]:
    """Composition distribution A_L: count of codewords per composition."""
    table: dict[tuple[int, ...], int] = {}
    for u in code.words:
        key = composition(code.ring, u)
        table[key] = table.get(key, 0) + 1
    return table


def jacobi_table(code: LinearCode, w) -> dict[tuple[int, ...], int]:
    """Jacobi composition distribution B_R of a code against mask w."""
    if len(w) != code.n:
        raise ValueError("mask length mismatch")
    table: dict[tuple[int, ...], int] = {}
    for u in code.words:
        key = jacobi_composition(code.ring, u, w)
        table[key] = table.get(key, 0) + 1
    return table


def joint_jacobi_table(
    code_c: LinearCode, code_d: LinearCode, w
) -> dict[tuple[int, ...], int]:
    """Joint composition distribution B_H over all pairs in C x D."""
    if code_c.ring != code_d.ring or code_c.n != code_d.n:
        raise ValueError("codes must share ring and length")
    if len(w) != code_c.n:
        raise ValueError("mask length mismatch")
    budget = enumeration_budget()
    if code_c.size * code_d.size > budget:
        raise BudgetExceeded(
            f"pair enumeration {code_c.size} x {code_d.size} exceeds budget {budget}"
        )
    q = code_c.ring.order
    qq = q * q
    nvars = qq * q
    table: dict[tuple[int, ...], int] = {}
    # inner loop over D with the (v, w) part of the index precomputed
    vw_rows = [
        tuple(y * q + m for y, m in zip(v, w)) for v in code_d.words
    ]
    for u in code_c.words:
        u_scaled = tuple(x * qq for x in u)
        for vw in vw_rows:
            counts = [0] * nvars
            for xs, tail in zip(u_scaled, vw):
                counts[xs + tail] += 1
            key = tuple(counts)
            table[key] = table.get(key, 0) + 1
    return table


# ---- code files ------------------------------------------------------------


def code_from_json(obj) -> LinearCode:
    if not isinstance(obj, dict):
        raise CodeFormatError("code object must be a JSON object")
    for key in ("ring", "n", "generators"):
        if key not in obj:
            raise CodeFormatError(f"missing key {key!r} in code object")
    try:
        ring = ring_from_json(obj["ring"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFormatError(f"bad ring object: {exc}") from exc
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise CodeFormatError("n must be a positive integer")
    gens = obj["generators"]
    if not isinstance(gens, list):
        raise CodeFormatError("generators must be a list of rows")
    rows = []
    for row in gens:
        if not isinstance(row, list) or not all(isinstance(s, int) for s in row):
            raise CodeFormatError("generator rows must be lists of integers")
        rows.append(tuple(row))
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise CodeFormatError("name must be a string")
    return LinearCode(ring, n, tuple(rows), name=name)


def code_to_json(code: LinearCode):
    return {
        "name": code.name,
        "ring": ring_to_json(code.ring),
        "n": code.n,
        "generators": [list(row) for row in code.generators],
    }


def fixtures_dir() -> Path:
    env = os.environ.get("JF_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "fixtures"


def resolve_code_path(spec: str) -> Path:
    """Resolve a code argument: a real path, else a file in the fixtures dir."""
    p = Path(spec)
    if p.exists():
        return p
    candidate = fixtures_dir() / spec
    if candidate.exists():
        return candidate
    if not spec.endswith(".json"):
        candidate = fixtures_dir() / f"{spec}.json"
        if candidate.exists():
            return candidate
    raise FileNotFoundError(f"no code file found for {spec!r}")


def load_code(spec: str) -> LinearCode:
    """Load a code from a path or a fixture name."""
    path = resolve_code_path(spec)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CodeFormatError(f"invalid JSON in {path}: {exc}") from exc
    return code_from_json(obj)
