"""Derived module operations built on the standard-basis kernel.

Everything here reduces to one primitive: standard bases of graph modules
under a block-eliminating order.  Intersections, subquotient dimensions
and submodule pullbacks are all obtained from syzygies, which keeps every
computation inside a single local-ordering engine.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ContainmentViolation
from .orders import LocalOrder, ModuleOrder
from .ring import Polynomial, RingSpec
from .standard_basis import ModuleElement, Submodule, local_colength, standard_basis


def _dedupe(elements) -> list[ModuleElement]:
    seen = set()
    out = []
    for el in elements:
        sig = el.signature()
        if sig not in seen:
            seen.add(sig)
            out.append(el)
    return out


def syzygies(gens: Sequence[ModuleElement], *, max_steps: int | None = None) -> Submodule:
    """Generators of the relation module {a in O^r : sum a_i * g_i = 0}.

    Computed from a standard basis of the graph module spanned by the
    g_i extended with tag components e_i, under an order that eliminates
    the first block: basis elements with vanishing leading block are
    exactly the syzygies, read off their tag parts.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("syzygies need at least one generator")
    ring = gens[0].ring
    m = gens[0].rank
    for g in gens:
        if g.ring != ring or g.rank != m:
            raise ValueError("generators live in different modules")
    r = len(gens)
    zero = ring.zero_monomial()
    graph = []
    for i, g in enumerate(gens):
        vec = dict(g.terms)
        vec[(m + i, zero)] = Fraction(1)
        graph.append(ModuleElement._raw(ring, m + r, vec))
    order = ModuleOrder.block_eliminating(LocalOrder(ring), m)
    sb = standard_basis(
        Submodule(ring, m + r, graph), order, with_representations=False, max_steps=max_steps
    )
    tags = []
    for el, (lead_comp, _) in zip(sb.elements, sb.lead_terms):
        if lead_comp >= m:
            # Lead in the trailing block forces the whole leading block to vanish.
            vec = {(c - m, mono): coeff for (c, mono), coeff in el.terms.items()}
            tags.append(ModuleElement._raw(ring, r, vec))
    return Submodule(ring, r, _dedupe(tags))


def intersect(M: Submodule, N: Submodule, *, max_steps: int | None = None) -> Submodule:
    """Generators of M intersect N via syzygies of the combined generators."""
    if M.ring != N.ring or M.rank != N.rank:
        raise ValueError("submodules live in different ambient modules")
    if M.is_zero() or N.is_zero():
        return Submodule.zero(M.ring, M.rank)
    combined = list(M.generators) + list(N.generators)
    relations = syzygies(combined, max_steps=max_steps)
    r = len(M.generators)
    out = []
    for rel in relations.generators:
        comps = rel.components
        combo = ModuleElement.zero(M.ring, M.rank)
        for i in range(r):
            if comps[i]:
                combo = combo + M.generators[i] * comps[i]
        if combo:
            out.append(combo)
    return Submodule(M.ring, M.rank, _dedupe(out))


def product(I: Submodule, J: Submodule) -> Submodule:
    """The ideal generated by all pairwise products of generators."""
    if I.rank != 1 or J.rank != 1:
        raise ValueError("product is defined for ideals only")
    if I.ring != J.ring:
        raise ValueError("mixed rings")
    polys = []
    for a in I.polynomials():
        for b in J.polynomials():
            polys.append(a * b)
    return Submodule.ideal(I.ring, _dedupe_polys(polys))


def _dedupe_polys(polys) -> list[Polynomial]:
    seen = set()
    out = []
    for p in polys:
        if p.is_zero():
            continue
        sig = frozenset(p.terms.items())
        if sig not in seen:
            seen.add(sig)
            out.append(p)
    return out


def module_sum(M: Submodule, N: Submodule) -> Submodule:
    """The submodule generated by both generator lists."""
    if M.ring != N.ring or M.rank != N.rank:
        raise ValueError("submodules live in different ambient modules")
    return Submodule(M.ring, M.rank, list(M.generators) + list(N.generators))


def _determinant(matrix: list[list[Polynomial]], ring: RingSpec) -> Polynomial:
    """Exact determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = Polynomial.zero(ring)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        cofactor = entry * _determinant(minor, ring)
        total = total + cofactor if j % 2 == 0 else total - cofactor
    return total


def jacobian_minors(fs: Sequence[Polynomial], k: int) -> Submodule:
    """The ideal of all k x k minors of the Jacobian matrix of fs."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one function")
    ring = fs[0].ring
    if k > ring.n:
        raise ValueError(f"minor size {k} exceeds the {ring.n} variables")
    if k < 1 or k > len(fs):
        raise ValueError(f"minor size {k} out of range for {len(fs)} functions")
    jacobian = [[f.derivative(i) for i in range(ring.n)] for f in fs]
    minors = []
    for rows in combinations(range(len(fs)), k):
        for cols in combinations(range(ring.n), k):
            matrix = [[jacobian[r][c] for c in cols] for r in rows]
            minors.append(_determinant(matrix, ring))
    return Submodule.ideal(ring, _dedupe_polys(minors))


def submodule_pullback(M: Submodule, N: Submodule, *, max_steps: int | None = None) -> Submodule:
    """The module K = {a in O^r : sum a_i * g_i lies in N}, g_i generating M.

    K is the projection of the syzygy module of (g_1..g_r, n_1..n_s) onto
    the first r coordinates.
    """
    r = len(M.generators)
    combined = list(M.generators) + list(N.generators)
    relations = syzygies(combined, max_steps=max_steps)
    projected = []
    for rel in relations.generators:
        vec = {(c, mono): coeff for (c, mono), coeff in rel.terms.items() if c < r}
        if vec:
            projected.append(ModuleElement._raw(M.ring, r, vec))
    return Submodule(M.ring, r, _dedupe(projected))


def subquotient_dimension(M: Submodule, N: Submodule, *, max_steps: int | None = None):
    """Vector-space dimension of M/N for N contained in M (module colength).

    Containment is verified by normal-form membership of every generator
    of N; violation raises ContainmentViolation.  Returns INFINITE when
    the quotient has infinite dimension.
    """
    if M.ring != N.ring or M.rank != N.rank:
        raise ValueError("submodules live in different ambient modules")
    if M.is_zero():
        if N.is_zero():
            return 0
        raise ContainmentViolation("second module is not contained in the first")
    sb = standard_basis(M, with_representations=False, max_steps=max_steps)
    for g in N.generators:
        if not sb.contains(g):
            raise ContainmentViolation("second module is not contained in the first")
    pullback = submodule_pullback(M, N, max_steps=max_steps)
    return local_colength(pullback, max_steps=max_steps)
