"""Weak normal forms and standard bases over local orderings.

Elements of a free module O^m are stored as dicts mapping (component,
monomial) pairs to nonzero Fraction coefficients.  Division is Mora's
variant: a reduction may recruit an earlier partial remainder as a new
reducer when every divisor of the lead term has larger ecart, which is
exactly what makes the loop terminate for local orders.  The price is that
the quotient identity holds only up to a unit u with u(0) != 0:

    u * f  =  sum_i q_i * g_i  +  remainder.

Every recruited reducer enters the identity multiplied by a monomial of
positive degree, so u stays a unit throughout; the certificate returned by
`mora_normal_form` records u and the q_i so callers can re-check the
identity exactly.

Colength and Krull dimension are read off the lead-term module of a
standard basis: the monomials (with component) outside it form a vector
space basis of the quotient.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ReductionLimitExceeded
from .orders import LocalOrder, ModuleOrder
from .ring import (
    Monomial,
    Polynomial,
    RingSpec,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_MAX_STEPS = 1_000_000

_ONE = Fraction(1)


def set_default_max_steps(limit: int) -> int:
    """Set the step cap used when callers pass max_steps=None; returns the old cap."""
    global DEFAULT_MAX_STEPS
    previous = DEFAULT_MAX_STEPS
    DEFAULT_MAX_STEPS = limit
    return previous


class _InfiniteColength:
    """Singleton marker for an infinite vector-space dimension."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _InfiniteColength()


def is_finite(value) -> bool:
    """True for an int colength, False for the INFINITE marker."""
    return value is not INFINITE


Term = tuple[int, Monomial]
Vec = dict[Term, Fraction]


class ModuleElement:
    """An element of a free module O^m with exact rational coefficients."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring: RingSpec, rank: int, terms: Vec | None = None):
        if rank < 1:
            raise ValueError("module rank must be at least 1")
        self.ring = ring
        self.rank = rank
        clean: Vec = {}
        if terms:
            for (comp, mono), coeff in terms.items():
                if not 0 <= comp < rank:
                    raise ValueError(f"component {comp} out of range for rank {rank}")
                if coeff:
                    clean[(comp, tuple(mono))] = Fraction(coeff)
        self.terms = clean

    @classmethod
    def _raw(cls, ring: RingSpec, rank: int, terms: Vec) -> ModuleElement:
        el = object.__new__(cls)
        el.ring = ring
        el.rank = rank
        el.terms = terms
        return el

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial]) -> ModuleElement:
        if not polys:
            raise ValueError("need at least one component")
        ring = polys[0].ring
        terms: Vec = {}
        for comp, p in enumerate(polys):
            if p.ring != ring:
                raise ValueError("mixed rings")
            for mono, coeff in p.terms.items():
                terms[(comp, mono)] = coeff
        return cls._raw(ring, len(polys), terms)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> ModuleElement:
        return cls.from_polynomials([p])

    @classmethod
    def unit_vector(cls, ring: RingSpec, rank: int, component: int) -> ModuleElement:
        zero = ring.zero_monomial()
        return cls(ring, rank, {(component, zero): _ONE})

    @classmethod
    def zero(cls, ring: RingSpec, rank: int) -> ModuleElement:
        return cls(ring, rank)

    def component(self, index: int) -> Polynomial:
        out = {m: c for (comp, m), c in self.terms.items() if comp == index}
        return Polynomial._raw(self.ring, out)

    @property
    def components(self) -> tuple[Polynomial, ...]:
        split: list[dict] = [dict() for _ in range(self.rank)]
        for (comp, mono), coeff in self.terms.items():
            split[comp][mono] = coeff
        return tuple(Polynomial._raw(self.ring, d) for d in split)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: ModuleElement) -> ModuleElement:
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            val = out.get(key, 0) + coeff
            if val:
                out[key] = val
            else:
                del out[key]
        return ModuleElement._raw(self.ring, self.rank, out)

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        return self + (-other)

    def __neg__(self) -> ModuleElement:
        return ModuleElement._raw(
            self.ring, self.rank, {k: -c for k, c in self.terms.items()}
        )

    def __mul__(self, scalar) -> ModuleElement:
        """Multiply by a Polynomial or a rational scalar."""
        if isinstance(scalar, Polynomial):
            if scalar.ring != self.ring:
                raise ValueError("mixed rings")
            out: Vec = {}
            for (comp, mono), coeff in self.terms.items():
                for smono, scoeff in scalar.terms.items():
                    key = (comp, mono_mul(mono, smono))
                    val = out.get(key, 0) + coeff * scoeff
                    if val:
                        out[key] = val
                    else:
                        del out[key]
            return ModuleElement._raw(self.ring, self.rank, out)
        factor = Fraction(scalar)
        if not factor:
            return ModuleElement.zero(self.ring, self.rank)
        return ModuleElement._raw(
            self.ring, self.rank, {k: c * factor for k, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def _check(self, other: ModuleElement):
        if self.ring != other.ring or self.rank != other.rank:
            raise ValueError("module elements live in different modules")

    def signature(self) -> frozenset:
        return frozenset(self.terms.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleElement)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.rank, self.signature()))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"<{self}>"


class Submodule:
    """A finitely generated submodule of O^m given by a generator list."""

    __slots__ = ("ring", "rank", "generators")

    def __init__(self, ring: RingSpec, rank: int, generators: Iterable[ModuleElement] = ()):
        self.ring = ring
        self.rank = rank
        gens = []
        for g in generators:
            if g.ring != ring or g.rank != rank:
                raise ValueError("generator does not live in the ambient module")
            if g.terms:
                gens.append(g)
        self.generators = tuple(gens)

    @classmethod
    def ideal(cls, ring: RingSpec, polys: Iterable[Polynomial]) -> Submodule:
        return cls(
            ring, 1, [ModuleElement.from_polynomial(p) for p in polys if not p.is_zero()]
        )

    @classmethod
    def zero(cls, ring: RingSpec, rank: int) -> Submodule:
        return cls(ring, rank)

    @classmethod
    def full(cls, ring: RingSpec, rank: int) -> Submodule:
        return cls(ring, rank, [ModuleElement.unit_vector(ring, rank, i) for i in range(rank)])

    def is_zero(self) -> bool:
        return not self.generators

    def polynomials(self) -> tuple[Polynomial, ...]:
        if self.rank != 1:
            raise ValueError("polynomials() is only defined for ideals")
        return tuple(g.component(0) for g in self.generators)

    def __repr__(self) -> str:
        return f"Submodule(rank={self.rank}, generators={len(self.generators)})"


class _Budget:
    """Shared reduction-step counter guarding against runaway computations."""

    __slots__ = ("remaining", "total")

    def __init__(self, limit: int):
        self.remaining = limit
        self.total = limit

    def spend(self):
        self.remaining -= 1
        if self.remaining < 0:
            raise ReductionLimitExceeded(
                f"aborted after {self.total} reduction steps; "
                "raise the step cap if the input is legitimately this large"
            )


class _Entry:
    """A reducer: either a basis/generator element or a recruited remainder.

    `vec` is stored content-normalized (coprime integer coefficients) and
    `scale` recovers the semantic value as scale*vec: the generator g_j for
    originals, the running remainder snapshot for recruits.
    """

    __slots__ = ("vec", "lt", "lc", "ecart", "scale", "index", "unit", "quot")

    def __init__(self, vec, lt, lc, ecart, scale, index=None, unit=None, quot=None):
        self.vec = vec
        self.lt = lt
        self.lc = lc
        self.ecart = ecart
        self.scale = scale
        self.index = index  # position in the generator list, None for recruits
        self.unit = unit    # recruits only: scale*vec = unit*f - sum quot[j]*g_j
        self.quot = quot


def _vec_axpy(target: Vec, source: Vec, shift: Monomial, factor: Fraction):
    """target += factor * x^shift * source, in place."""
    for (comp, mono), coeff in source.items():
        key = (comp, mono_mul(mono, shift))
        val = target.get(key, 0) + factor * coeff
        if val:
            target[key] = val
        else:
            del target[key]


def _vec_axpy_bounded(target: Vec, source: Vec, shift: Monomial, factor: Fraction, bound: int):
    """Like _vec_axpy but discarding all terms of total degree >= bound.

    Discarded terms lie in m^bound, so this is exact arithmetic on
    representatives modulo m^bound.
    """
    base = sum(shift)
    for (comp, mono), coeff in source.items():
        if base + sum(mono) >= bound:
            continue
        key = (comp, mono_mul(mono, shift))
        val = target.get(key, 0) + factor * coeff
        if val:
            target[key] = val
        else:
            del target[key]


def _poly_axpy(target: dict, source: dict, shift: Monomial, factor: Fraction):
    """Same as _vec_axpy for scalar (monomial-keyed) dicts."""
    for mono, coeff in source.items():
        key = mono_mul(mono, shift)
        val = target.get(key, 0) + factor * coeff
        if val:
            target[key] = val
        else:
            del target[key]


def _lead_and_maxdeg(vec: Vec, keyf):
    best_term = None
    best_key = None
    maxdeg = 0
    for term in vec:
        k = keyf(term)
        if best_key is None or k > best_key:
            best_key, best_term = k, term
        d = sum(term[1])
        if d > maxdeg:
            maxdeg = d
    return best_term, maxdeg


def _content(vec: Vec) -> Fraction:
    """Positive rational c such that vec/c has coprime integer coefficients."""
    num_gcd = 0
    den_lcm = 1
    for coeff in vec.values():
        num_gcd = gcd(num_gcd, coeff.numerator)
        den_lcm = den_lcm // gcd(den_lcm, coeff.denominator) * coeff.denominator
    return Fraction(num_gcd, den_lcm)


def _normalize(vec: Vec) -> Fraction:
    """Divide vec by its content in place; returns the removed content.

    Keeping every working remainder primitive is what prevents the
    geometric coefficient swell of naive rational division chains (the
    primitive-remainder-sequence idea); the removed scalars are carried in
    the certificate instead.
    """
    c = _content(vec)
    if c != 1:
        inv = 1 / c
        for key in vec:
            vec[key] *= inv
    return c


def _make_entry(vec: Vec, keyf, index=None) -> _Entry:
    vec = dict(vec)
    scale = _normalize(vec)
    lt, maxdeg = _lead_and_maxdeg(vec, keyf)
    return _Entry(vec, lt, vec[lt], maxdeg - sum(lt[1]), scale, index)


def _mora_nf(f_vec: Vec, entries: list[_Entry], keyf, budget: _Budget, track: bool, bound: int | None = None):
    """Mora weak normal form of f_vec against `entries`.

    Returns (remainder, unit, quotients); the remainder is content-
    normalized, which is harmless since a weak normal form is only defined
    up to units anyway.  When track is set, unit and quotients are
    monomial-keyed coefficient dicts satisfying

        unit*f = sum quotients[j]*g_j + remainder,   unit(0) != 0,

    for the semantic generators g_j (entry scales included).
    """
    ring_zero = None
    h: Vec = dict(f_vec)
    scale = _normalize(h) if h else _ONE  # semantic remainder = scale*h
    unit = None
    quot: dict[int, dict] = {}
    if track:
        for e in entries:
            if e.lt is not None:
                ring_zero = (0,) * len(e.lt[1])
                break
        if ring_zero is None and h:
            ring_zero = (0,) * len(next(iter(h))[1])
        unit = {ring_zero: _ONE} if ring_zero is not None else {}
    reducers = list(entries)
    while h:
        lt_h, maxdeg_h = _lead_and_maxdeg(h, keyf)
        comp_h, mono_h = lt_h
        chosen = None
        for e in reducers:
            if e.lt[0] == comp_h and mono_divides(e.lt[1], mono_h):
                if chosen is None or e.ecart < chosen.ecart:
                    chosen = e
        if chosen is None:
            break
        budget.spend()
        ecart_h = maxdeg_h - sum(mono_h)
        if chosen.ecart > ecart_h:
            # Recruit the current remainder: its lead strictly decreases from
            # here on, so any later use multiplies the identity by a monomial
            # of positive degree and the tracked unit stays a unit.
            reducers.append(
                _Entry(
                    dict(h),
                    lt_h,
                    h[lt_h],
                    ecart_h,
                    scale,
                    None,
                    dict(unit) if track else None,
                    {j: dict(d) for j, d in quot.items()} if track else None,
                )
            )
        shift = mono_div(mono_h, chosen.lt[1])
        factor = h[lt_h] / chosen.lc
        if bound is None:
            _vec_axpy(h, chosen.vec, shift, -factor)
        else:
            _vec_axpy_bounded(h, chosen.vec, shift, -factor, bound)
        if track:
            m_coeff = scale * factor / chosen.scale
            if chosen.index is not None:
                _poly_axpy(quot.setdefault(chosen.index, {}), {ring_zero: _ONE}, shift, m_coeff)
            else:
                _poly_axpy(unit, chosen.unit, shift, -m_coeff)
                for j, qd in chosen.quot.items():
                    _poly_axpy(quot.setdefault(j, {}), qd, shift, -m_coeff)
        if h:
            scale *= _normalize(h)
    if track and unit is not None and scale != 1:
        # rescale so the identity matches the normalized remainder exactly
        inv = 1 / scale
        for key in unit:
            unit[key] *= inv
        for qd in quot.values():
            for key in qd:
                qd[key] *= inv
    return h, unit, quot


class MoraCertificate:
    """Unit and quotients witnessing a weak normal form.

    For input f, generators g_1..g_s and remainder r the certificate
    satisfies unit*f = sum_i quotients[i]*g_i + r with unit(0) != 0.
    """

    __slots__ = ("unit", "quotients")

    def __init__(self, unit: Polynomial, quotients: tuple[Polynomial, ...]):
        self.unit = unit
        self.quotients = quotients

    def verify(self, f: ModuleElement, gens: Sequence[ModuleElement], remainder: ModuleElement) -> bool:
        if not self.unit.constant_term():
            return False
        acc = f * self.unit - remainder
        for q, g in zip(self.quotients, gens):
            acc = acc - g * q
        return acc.is_zero()

    def __repr__(self) -> str:
        return f"MoraCertificate(unit={self.unit!r})"


def mora_normal_form(
    f: ModuleElement,
    gens: Sequence[ModuleElement],
    order: ModuleOrder | None = None,
    max_steps: int | None = None,
) -> tuple[ModuleElement, MoraCertificate]:
    """Weak normal form of f against gens, with its unit certificate.

    No lead term of the remainder is divisible by a lead term of gens in
    the matching component.
    """
    ring, rank = f.ring, f.rank
    if order is None:
        order = ModuleOrder.term_over_position(LocalOrder(ring))
    keyf = order.term_key()
    entries = [
        _make_entry(dict(g.terms), keyf, index=i) for i, g in enumerate(gens) if g.terms
    ]
    index_map = [i for i, g in enumerate(gens) if g.terms]
    budget = _Budget(max_steps if max_steps is not None else DEFAULT_MAX_STEPS)
    rem, unit, quot = _mora_nf(dict(f.terms), entries, keyf, budget, track=True)
    if unit is None or not unit:
        unit = {ring.zero_monomial(): _ONE}
    quotients = [Polynomial.zero(ring)] * len(gens)
    for local_idx, qd in quot.items():
        quotients[index_map[local_idx]] = Polynomial._raw(ring, qd)
    return (
        ModuleElement._raw(ring, rank, rem),
        MoraCertificate(Polynomial._raw(ring, unit), tuple(quotients)),
    )


class StandardBasis:
    """A standard basis of a submodule under a fixed module order.

    Every input generator reduces to zero against `elements`, and the
    S-element of every critical pair of `elements` does as well.  When
    representations are tracked, `representations[i]` gives polynomials
    c_1..c_r with elements[i] = sum_j c_j * generator_j exactly.
    """

    __slots__ = (
        "ambient", "order", "elements", "lead_terms", "representations",
        "truncated_at", "_entries",
    )

    def __init__(self, ambient, order, elements, lead_terms, representations=None,
                 truncated_at=None):
        self.ambient = ambient
        self.order = order
        self.elements = tuple(elements)
        self.lead_terms = tuple(lead_terms)
        self.representations = representations
        self.truncated_at = truncated_at
        self._entries = None

    def _reducer_entries(self) -> list[_Entry]:
        if self._entries is None:
            keyf = self.order.term_key()
            self._entries = [
                _make_entry(dict(e.terms), keyf, index=i)
                for i, e in enumerate(self.elements)
            ]
        return self._entries

    def normal_form(self, f: ModuleElement, max_steps: int | None = None) -> ModuleElement:
        """Weak normal form of f against the basis (no certificate)."""
        if self.truncated_at is not None:
            raise ValueError("membership needs an untruncated standard basis")
        if f.ring != self.ambient.ring or f.rank != self.ambient.rank:
            raise ValueError("element does not live in the ambient module")
        budget = _Budget(max_steps if max_steps is not None else DEFAULT_MAX_STEPS)
        rem, _, _ = _mora_nf(
            dict(f.terms), self._reducer_entries(), self.order.term_key(), budget, track=False
        )
        return ModuleElement._raw(f.ring, f.rank, rem)

    def contains(self, f: ModuleElement) -> bool:
        return self.normal_form(f).is_zero()

    def __repr__(self) -> str:
        return f"StandardBasis(rank={self.ambient.rank}, size={len(self.elements)})"


def standard_basis(
    module: Submodule,
    order: ModuleOrder | None = None,
    *,
    with_representations: bool = True,
    max_steps: int | None = None,
    truncate_degree: int | None = None,
) -> StandardBasis:
    """Compute a standard basis of `module` by Mora's algorithm.

    Critical pairs are processed smallest lcm-degree first; reducers are
    chosen by minimal ecart with ties broken by list position.  The result
    is minimal: no lead term divides another.

    With `truncate_degree=D` all terms of degree >= D are discarded, i.e.
    the module is replaced by module + m^D * O^rank.  That is only useful
    for colength counting (see local_colength); such bases carry no
    representations and refuse membership queries.
    """
    ring = module.ring
    if order is None:
        order = ModuleOrder.term_over_position(LocalOrder(ring))
    if truncate_degree is not None and with_representations:
        raise ValueError("representations are not defined under truncation")
    keyf = order.term_key()
    budget = _Budget(max_steps if max_steps is not None else DEFAULT_MAX_STEPS)
    bound = truncate_degree
    r = len(module.generators)

    basis: list[_Entry] = []
    reps: list[list[Polynomial]] | None = [] if with_representations else None

    def push(vec: Vec, rep: list[Polynomial] | None):
        # store primitive integer vectors with positive lead coefficient
        vec = dict(vec)
        mu = _normalize(vec)
        lt, maxdeg = _lead_and_maxdeg(vec, keyf)
        if vec[lt] < 0:
            vec = {k: -c for k, c in vec.items()}
            mu = -mu
        if rep is not None and mu != 1:
            inv = 1 / mu
            rep = [p * inv for p in rep]
        idx = len(basis)
        basis.append(_Entry(vec, lt, vec[lt], maxdeg - sum(lt[1]), _ONE, index=idx))
        if reps is not None:
            reps.append(rep)
        for other in range(idx):
            o_lt = basis[other].lt
            if o_lt[0] == lt[0]:
                lcm = mono_lcm(o_lt[1], lt[1])
                heapq.heappush(pairs, (sum(lcm), other, idx))

    pairs: list[tuple[int, int, int]] = []
    for i, g in enumerate(module.generators):
        vec = dict(g.terms)
        if bound is not None:
            vec = {k: c for k, c in vec.items() if sum(k[1]) < bound}
            if not vec:
                continue
        rep = None
        if with_representations:
            rep = [Polynomial.zero(ring) for _ in range(r)]
            rep[i] = Polynomial.constant(ring, 1)
        push(vec, rep)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        gi, gj = basis[i], basis[j]
        lcm = mono_lcm(gi.lt[1], gj.lt[1])
        shift_i = mono_div(lcm, gi.lt[1])
        shift_j = mono_div(lcm, gj.lt[1])
        s_vec: Vec = {}
        if bound is None:
            _vec_axpy(s_vec, gi.vec, shift_i, gj.lc)
            _vec_axpy(s_vec, gj.vec, shift_j, -gi.lc)
        else:
            _vec_axpy_bounded(s_vec, gi.vec, shift_i, gj.lc, bound)
            _vec_axpy_bounded(s_vec, gj.vec, shift_j, -gi.lc, bound)
        if not s_vec:
            continue
        rem, unit, quot = _mora_nf(
            s_vec, basis, keyf, budget, track=with_representations, bound=bound
        )
        if not rem:
            continue
        rep = None
        if with_representations:
            u = Polynomial._raw(ring, unit)
            mono_i = Polynomial.term(ring, shift_i, gj.lc)
            mono_j = Polynomial.term(ring, shift_j, gi.lc)
            rep = [
                u * (mono_i * a - mono_j * b) for a, b in zip(reps[i], reps[j])
            ]
            for t, qd in quot.items():
                q = Polynomial._raw(ring, qd)
                rep = [acc - q * p for acc, p in zip(rep, reps[t])]
        push(rem, rep)

    # Minimalize: keep only elements whose lead term is not divisible by the
    # lead term of another kept element.  Processing by ascending lead degree
    # guarantees divisors are seen first.
    ordering = sorted(range(len(basis)), key=lambda t: keyf(basis[t].lt), reverse=True)
    kept: list[int] = []
    for t in ordering:
        lt = basis[t].lt
        if not any(
            basis[s].lt[0] == lt[0] and mono_divides(basis[s].lt[1], lt[1]) for s in kept
        ):
            kept.append(t)

    elements = [ModuleElement._raw(ring, module.rank, basis[t].vec) for t in kept]
    lead_terms = [basis[t].lt for t in kept]
    representations = None
    if with_representations:
        representations = tuple(tuple(reps[t]) for t in kept)
    return StandardBasis(
        module, order, elements, lead_terms, representations, truncated_at=truncate_degree
    )


def colength(basis: StandardBasis):
    """Number of monomials (with component) outside the lead-term module.

    Returns INFINITE iff some component misses a pure power of some
    variable among its lead terms, which is exactly when the quotient has
    infinite vector-space dimension.
    """
    value, _ = _colength_stats(basis)
    return value


def _colength_stats(basis: StandardBasis):
    """(colength, top degree of the standard monomials); (INFINITE, None)."""
    ring = basis.ambient.ring
    n = ring.n
    rank = basis.ambient.rank
    by_component: dict[int, list[Monomial]] = {c: [] for c in range(rank)}
    for comp, mono in basis.lead_terms:
        by_component[comp].append(mono)
    total = 0
    top = 0
    for comp in range(rank):
        leads = by_component[comp]
        bounds = []
        for i in range(n):
            pure = [m[i] for m in leads if all(e == 0 for k, e in enumerate(m) if k != i)]
            if not pure:
                return INFINITE, None
            bounds.append(min(pure))
        count, comp_top = _count_staircase(leads, bounds)
        total += count
        top = max(top, comp_top)
    return total, top


def _count_staircase(leads: list[Monomial], bounds: list[int]):
    """Monomials below `bounds` outside the leads: (count, max total degree)."""
    count = 0
    top = 0
    stack = [(0, ())]
    n = len(bounds)
    while stack:
        i, prefix = stack.pop()
        if i == n:
            mono = prefix
            if not any(mono_divides(l, mono) for l in leads):
                count += 1
                top = max(top, sum(mono))
            continue
        for e in range(bounds[i]):
            stack.append((i + 1, prefix + (e,)))
    return count, top


_TRUNCATION_LADDER = (8, 12, 16, 20, 24, 28)


def local_colength(module: Submodule, order: ModuleOrder | None = None, *,
                   max_steps: int | None = None):
    """Colength of a submodule, computed with certified degree truncation.

    Standard bases are computed modulo m^D for increasing D; once the
    counted staircase has top degree d with d + 2 <= D, every monomial of
    degree d+1 .. D-1 lies in the lead module, so m^(d+1) is contained in
    the module (Nakayama) and the count is exact.  If no truncation level
    certifies (in particular whenever the colength is infinite), the exact
    untruncated computation decides.
    """
    for degree in _TRUNCATION_LADDER:
        basis = standard_basis(
            module, order, with_representations=False, max_steps=max_steps,
            truncate_degree=degree,
        )
        value, top = _colength_stats(basis)
        if is_finite(value) and top + 2 <= degree:
            return value
    basis = standard_basis(module, order, with_representations=False, max_steps=max_steps)
    return colength(basis)


def krull_dimension(basis: StandardBasis) -> int:
    """Dimension of the quotient by the lead-term ideal (ideals only).

    Equals the size of a largest variable subset S such that no lead
    monomial involves only variables from S.  Returns -1 for the unit
    ideal, whose quotient is the zero ring.
    """
    if basis.ambient.rank != 1:
        raise ValueError("Krull dimension is defined for ideals only")
    n = basis.ambient.ring.n
    supports = [frozenset(i for i, e in enumerate(mono) if e) for _, mono in basis.lead_terms]
    if any(not s for s in supports):
        return -1
    best = -1
    for mask in range(1 << n):
        subset = frozenset(i for i in range(n) if mask & (1 << i))
        if len(subset) <= best:
            continue
        if not any(s <= subset for s in supports):
            best = len(subset)
    return best
