"""Weight enumerators of codes and their duality transforms.

Enumerator polynomials carry one variable per symbol tuple: complete
weight enumerators use tuples of length one, Jacobi and joint complete
weight enumerators length two, joint Jacobi polynomials length three.
The duality transforms substitute character sums for variables and
rescale by the size of the code being dualized, so applying one to the
enumerator of (C, D, w) yields the enumerator with C or D replaced by
its dual.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .codes import (
    BudgetExceeded,
    LinearCode,
    comp_table,
    enumeration_budget,
    jacobi_table,
    joint_jacobi_table,
)
from .polynomials import SparsePolynomial
from .rings import RingSpec

__all__ = [
    "cwe",
    "cwe_genus",
    "jacobi",
    "joint_cwe",
    "joint_jacobi",
    "collapse",
    "macwilliams_single",
    "macwilliams_first",
    "macwilliams_second",
    "macwilliams_both",
]


def _from_counts(ring: RingSpec, arity: int, counts: dict) -> SparsePolynomial:
    return SparsePolynomial(
        ring, arity, {key: Fraction(mult) for key, mult in counts.items()}
    )


def cwe(code: LinearCode) -> SparsePolynomial:
    """Complete weight enumerator: one monomial per codeword."""
    return _from_counts(code.ring, 1, comp_table(code))


def cwe_genus(code: LinearCode, genus: int) -> SparsePolynomial:
    """Genus-g enumerator over g-tuples of codewords."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    budget = enumeration_budget()
    if code.size**genus > budget:
        raise BudgetExceeded(
            f"genus-{genus} enumeration of {code.size}^{genus} tuples "
            f"exceeds budget {budget}"
        )
    q = code.ring.order
    nvars = q**genus
    counts: dict[tuple[int, ...], int] = {}
    for words in itertools.product(code.words, repeat=genus):
        vec = [0] * nvars
        for col in zip(*words):
            idx = 0
            for s in col:
                idx = idx * q + s
            vec[idx] += 1
        key = tuple(vec)
        counts[key] = counts.get(key, 0) + 1
    return _from_counts(code.ring, genus, counts)


def jacobi(code: LinearCode, w) -> SparsePolynomial:
    """Jacobi polynomial of a code with respect to a fixed mask word."""
    return _from_counts(code.ring, 2, jacobi_table(code, w))


def joint_cwe(code_c: LinearCode, code_d: LinearCode) -> SparsePolynomial:
    """Joint complete weight enumerator over pairs in C x D."""
    if code_c.ring != code_d.ring or code_c.n != code_d.n:
        raise ValueError("codes must share ring and length")
    budget = enumeration_budget()
    if code_c.size * code_d.size > budget:
        raise BudgetExceeded(
            f"pair enumeration {code_c.size} x {code_d.size} exceeds budget {budget}"
        )
    q = code_c.ring.order
    nvars = q * q
    counts: dict[tuple[int, ...], int] = {}
    for u in code_c.words:
        for v in code_d.words:
            vec = [0] * nvars
            for x, y in zip(u, v):
                vec[x * q + y] += 1
            key = tuple(vec)
            counts[key] = counts.get(key, 0) + 1
    return _from_counts(code_c.ring, 2, counts)


def joint_jacobi(code_c: LinearCode, code_d: LinearCode, w) -> SparsePolynomial:
    """Joint Jacobi polynomial of a pair of codes against a mask word."""
    return _from_counts(code_c.ring, 3, joint_jacobi_table(code_c, code_d, w))


def collapse(poly: SparsePolynomial, keep_slots) -> SparsePolynomial:
    """Merge variables by keeping only the given symbol slots.

    Collapsing a joint Jacobi polynomial on slots (0, 2) recovers |D|
    copies of the Jacobi polynomial of C, and so on down the chain.
    """
    slots = tuple(keep_slots)
    if not slots:
        raise ValueError("keep_slots must name at least one slot")
    if len(set(slots)) != len(slots):
        raise ValueError("keep_slots must not repeat a slot")
    for s in slots:
        if not 0 <= s < poly.arity:
            raise ValueError(f"slot {s} out of range for arity {poly.arity}")
    target_arity = len(slots)
    rules = {}
    for idx in range(poly.nvars):
        symbols = poly.var_tuple(idx)
        kept = tuple(symbols[s] for s in slots)
        new_idx = 0
        for s in kept:
            new_idx = new_idx * poly.ring.order + s
        rules[idx] = SparsePolynomial.variable(poly.ring, target_arity, new_idx)
    return poly.substitute(rules)


# ---- duality transforms ----------------------------------------------------


def _pairing(ring: RingSpec, a: int, b: int):
    return ring.chi(ring.mul(a, b))


def _rule_poly(ring: RingSpec, arity: int, entries) -> SparsePolynomial:
    nvars = ring.order**arity
    terms: dict[tuple[int, ...], object] = {}
    for symbols, coeff in entries:
        idx = 0
        for s in symbols:
            idx = idx * ring.order + s
        exps = [0] * nvars
        exps[idx] = 1
        key = tuple(exps)
        if key in terms:
            terms[key] = terms[key] + coeff
        else:
            terms[key] = coeff
    return SparsePolynomial(ring, arity, terms)


def _scaled(poly: SparsePolynomial, size) -> SparsePolynomial:
    return poly.scale(Fraction(1, size))


def macwilliams_single(poly: SparsePolynomial, size: int) -> SparsePolynomial:
    """Duality transform on the code slot of a Jacobi polynomial."""
    if poly.arity != 2:
        raise ValueError("single transform expects a two-slot polynomial")
    ring = poly.ring
    rules = {}
    for idx in range(poly.nvars):
        a1, a2 = poly.var_tuple(idx)
        entries = [((b, a2), _pairing(ring, a1, b)) for b in ring.elements]
        rules[idx] = _rule_poly(ring, 2, entries)
    return _scaled(poly.substitute(rules), size)


def macwilliams_first(poly: SparsePolynomial, size: int) -> SparsePolynomial:
    """Duality transform on the first code slot of a joint polynomial."""
    if poly.arity != 3:
        raise ValueError("first transform expects a three-slot polynomial")
    ring = poly.ring
    rules = {}
    for idx in range(poly.nvars):
        a1, a2, a3 = poly.var_tuple(idx)
        entries = [((b, a2, a3), _pairing(ring, a1, b)) for b in ring.elements]
        rules[idx] = _rule_poly(ring, 3, entries)
    return _scaled(poly.substitute(rules), size)


def macwilliams_second(poly: SparsePolynomial, size: int) -> SparsePolynomial:
    """Duality transform on the second code slot of a joint polynomial."""
    if poly.arity != 3:
        raise ValueError("second transform expects a three-slot polynomial")
    ring = poly.ring
    rules = {}
    for idx in range(poly.nvars):
        a1, a2, a3 = poly.var_tuple(idx)
        entries = [((a1, b, a3), _pairing(ring, a2, b)) for b in ring.elements]
        rules[idx] = _rule_poly(ring, 3, entries)
    return _scaled(poly.substitute(rules), size)


def macwilliams_both(
    poly: SparsePolynomial, size_c: int, size_d: int
) -> SparsePolynomial:
    """Duality transform on both code slots of a joint polynomial.

    The paired character sum factors per slot, so the transform is the
    two single-slot transforms composed; expanding slot by slot keeps
    the intermediate term count at q^n per monomial instead of q^(2n).
    """
    if poly.arity != 3:
        raise ValueError("both transform expects a three-slot polynomial")
    return macwilliams_second(macwilliams_first(poly, size_c), size_d)
