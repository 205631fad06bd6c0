"""Vector fields tangent to a variety germ and the Bruce-Roberts numbers.

For a germ (X,0) with ideal generated by f_1..f_k, the module of tangent
(logarithmic) vector fields is

    Theta_X = {xi : df_r(xi) lies in the ideal, for every r},

computed one generator at a time: the fields satisfying the condition for
f_r are the first n coordinates of the syzygies of the row

    (df_r/dx_1, ..., df_r/dx_n, f_1, ..., f_k),

and Theta_X is the intersection of those projections over r.  The three
Bruce-Roberts-type numbers are colengths of df(Theta_X), optionally
enlarged by the ideal of X or by the function itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import PreconditionViolation
from .module_ops import intersect, module_sum, syzygies
from .ring import Polynomial, RingSpec, gradient
from .standard_basis import (
    ModuleElement,
    StandardBasis,
    Submodule,
    krull_dimension,
    local_colength,
    standard_basis,
)


class VarietyGerm:
    """A variety germ at the origin, given by polynomial ideal generators.

    The full ambient space C^n is encoded by an explicit flag (empty
    generator lists are otherwise invalid), so the tangent module of the
    smooth total space stays representable.
    """

    def __init__(self, ring: RingSpec, generators=(), *, _ambient: bool = False):
        gens = tuple(generators)
        if _ambient:
            if gens:
                raise ValueError("the ambient germ takes no generators")
        else:
            if not gens:
                raise ValueError("a proper variety needs at least one generator")
            for g in gens:
                if not isinstance(g, Polynomial) or g.ring != ring:
                    raise ValueError("generators must be polynomials in the given ring")
                if g.is_zero():
                    raise ValueError("zero generators are not allowed")
                if g.constant_term():
                    raise ValueError("generators must vanish at the origin")
        self.ring = ring
        self.generators = gens
        self._ambient = _ambient

    @classmethod
    def ambient(cls, ring: RingSpec) -> VarietyGerm:
        """The germ of the whole ambient space C^n."""
        return cls(ring, (), _ambient=True)

    @property
    def is_ambient(self) -> bool:
        return self._ambient

    @property
    def k(self) -> int:
        return len(self.generators)

    @cached_property
    def ideal(self) -> Submodule:
        return Submodule.ideal(self.ring, self.generators)

    @cached_property
    def ideal_basis(self) -> StandardBasis:
        return standard_basis(self.ideal, with_representations=False)

    @cached_property
    def dimension(self) -> int:
        if self._ambient:
            return self.ring.n
        return krull_dimension(self.ideal_basis)

    @cached_property
    def tangent_module(self) -> "TangentModule":
        return _compute_theta(self)

    def __repr__(self) -> str:
        if self._ambient:
            return f"VarietyGerm.ambient({self.ring!r})"
        return f"VarietyGerm({self.ring!r}, {len(self.generators)} generators)"


@dataclass(frozen=True)
class TangentModule:
    """Generators of the module of vector fields tangent to a germ."""

    theta: Submodule

    @property
    def generators(self) -> tuple[ModuleElement, ...]:
        return self.theta.generators


def _interreduce(ring: RingSpec, rank: int, gens) -> list[ModuleElement]:
    """Drop every generator that already lies in the span of the others."""
    seen = set()
    kept: list[ModuleElement] = []
    for g in gens:
        sig = g.signature()
        if g.terms and sig not in seen:
            seen.add(sig)
            kept.append(g)
    i = 0
    while i < len(kept) and len(kept) > 1:
        others = kept[:i] + kept[i + 1 :]
        basis = standard_basis(Submodule(ring, rank, others), with_representations=False)
        if basis.contains(kept[i]):
            kept.pop(i)
        else:
            i += 1
    return kept


def _compute_theta(X: VarietyGerm) -> TangentModule:
    ring = X.ring
    n = ring.n
    if X.is_ambient:
        return TangentModule(Submodule.full(ring, n))
    k = X.k
    result: Submodule | None = None
    for f_r in X.generators:
        row = [ModuleElement.from_polynomial(f_r.derivative(i)) for i in range(n)]
        row += [ModuleElement.from_polynomial(g) for g in X.generators]
        relations = syzygies(row)  # submodule of O^(n+k)
        projected = []
        seen = set()
        for rel in relations.generators:
            vec = {(c, mono): coeff for (c, mono), coeff in rel.terms.items() if c < n}
            if vec:
                el = ModuleElement._raw(ring, n, vec)
                sig = el.signature()
                if sig not in seen:
                    seen.add(sig)
                    projected.append(el)
        tangent_r = Submodule(ring, n, projected)
        result = tangent_r if result is None else intersect(result, tangent_r)
    reduced = _interreduce(ring, n, result.generators)
    return TangentModule(Submodule(ring, n, reduced))


def theta_X(X: VarietyGerm) -> TangentModule:
    """The module of ambient vector fields tangent to (X,0)."""
    return X.tangent_module


def df_theta(f: Polynomial, T: TangentModule) -> Submodule:
    """The ideal df(Theta_X) generated by applying df to each tangent field."""
    if f.constant_term():
        raise PreconditionViolation("the function must vanish at the origin")
    ring = f.ring
    grads = gradient(f)
    images = []
    for xi in T.generators:
        value = Polynomial.zero(ring)
        for i, comp in enumerate(xi.components):
            if comp and grads[i]:
                value = value + comp * grads[i]
        images.append(value)
    return Submodule.ideal(ring, images)


def mu_BR(f: Polynomial, X: VarietyGerm):
    """The Bruce-Roberts number: colength of df(Theta_X).

    INFINITE signals that f is not finitely determined with respect to the
    coordinate changes preserving X.
    """
    image = df_theta(f, X.tangent_module)
    return local_colength(image)


def mu_BR_rel(f: Polynomial, X: VarietyGerm):
    """The relative Bruce-Roberts number: colength of df(Theta_X) + I(X,0)."""
    image = df_theta(f, X.tangent_module)
    return local_colength(module_sum(image, X.ideal))


def tau_BR(f: Polynomial, X: VarietyGerm):
    """The Bruce-Roberts Tjurina number: colength of df(Theta_X) + (f)."""
    image = df_theta(f, X.tangent_module)
    enlarged = module_sum(image, Submodule.ideal(f.ring, [f]))
    return local_colength(enlarged)
