"""Groebner-basis engine: Buchberger, normal forms, elimination, dimension,
degree of zero-dimensional ideals, and parametric pseudo-reduction.

Buchberger runs with the sugar selection strategy and both classical
criteria (coprime leading terms, chain criterion).  Resource caps are
explicit and raise ResourceLimitError with partial statistics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Optional, Sequence, Tuple

from .gaussian import QI, QI_ONE, QI_ZERO
from .orders import MonomialOrder, block_elim, grevlex, lex
from .poly import Poly, PolyError, VarTable


class ResourceLimitError(RuntimeError):
    def __init__(self, message: str, stats: dict):
        super().__init__(f"{message} ({stats})")
        self.stats = stats


@dataclass
class Limits:
    """Resource caps for basis computations; mutable so a front end can
    tighten or relax the shared default instance."""
    max_degree: int = 80
    max_basis: int = 400


DEFAULT_LIMITS = Limits()


def _lm(p: Poly, order: MonomialOrder) -> tuple:
    return max(p.terms, key=order.key)


def _lc(p: Poly, order: MonomialOrder) -> QI:
    return p.terms[_lm(p, order)]


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def reduce_poly(p: Poly, basis: Sequence[Poly], order: MonomialOrder) -> Poly:
    """Full remainder of p on division by basis (tail terms reduced too)."""
    table = p.table
    remainder = {}
    work = dict(p.terms)
    lms = [(_lm(g, order), g) for g in basis if not g.is_zero()]
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        hit = None
        for lm_g, g in lms:
            if _divides(lm_g, m):
                hit = (lm_g, g)
                break
        if hit is None:
            remainder[m] = remainder.get(m, QI_ZERO) + c
            continue
        lm_g, g = hit
        factor = c / g.terms[lm_g]
        q = _quot(m, lm_g)
        for mg, cg in g.terms.items():
            if mg == lm_g:
                continue
            key = tuple(a + b for a, b in zip(mg, q))
            s = work.get(key, QI_ZERO) - factor * cg
            if s.is_zero():
                work.pop(key, None)
            else:
                work[key] = s
    return Poly(table, remainder)


def _s_poly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf, lg = _lm(f, order), _lm(g, order)
    l = _lcm(lf, lg)
    a = f.scale_monomial(_quot(l, lf), QI_ONE / f.terms[lf])
    b = g.scale_monomial(_quot(l, lg), QI_ONE / g.terms[lg])
    return a - b


def buchberger(
    gens: Sequence[Poly], order: MonomialOrder, limits: Limits = DEFAULT_LIMITS
) -> List[Poly]:
    """Reduced Groebner basis of the given generators."""
    G = [g for g in gens if not g.is_zero()]
    if not G:
        return []
    table = G[0].table
    G = [g.monic(order) for g in G]
    sugar = [g.total_degree() for g in G]

    pairs = {}

    def pair_data(i, j):
        li, lj = _lm(G[i], order), _lm(G[j], order)
        l = _lcm(li, lj)
        s = max(sugar[i] + sum(_quot(l, li)), sugar[j] + sum(_quot(l, lj)))
        return (s, order.key(l), l)

    for i, j in itertools.combinations(range(len(G)), 2):
        pairs[(i, j)] = pair_data(i, j)

    reductions = 0
    while pairs:
        (i, j), (s, _, l) = min(pairs.items(), key=lambda kv: (kv[1][0], kv[1][1]))
        del pairs[(i, j)]
        li, lj = _lm(G[i], order), _lm(G[j], order)
        # first criterion: coprime leading monomials
        if tuple(a + b for a, b in zip(li, lj)) == l:
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if (
                _divides(_lm(G[k], order), l)
                and (min(i, k), max(i, k)) not in pairs
                and (min(j, k), max(j, k)) not in pairs
            ):
                skip = True
                break
        if skip:
            continue
        r = reduce_poly(_s_poly(G[i], G[j], order), G, order)
        reductions += 1
        if r.is_zero():
            continue
        if r.total_degree() > limits.max_degree:
            raise ResourceLimitError(
                "degree cap exceeded during basis computation",
                {"basis_size": len(G), "reductions": reductions,
                 "degree": r.total_degree(), "max_degree": limits.max_degree},
            )
        r = r.monic(order)
        t = len(G)
        G.append(r)
        sugar.append(s if s > r.total_degree() else r.total_degree())
        if len(G) > limits.max_basis:
            raise ResourceLimitError(
                "basis size cap exceeded",
                {"basis_size": len(G), "reductions": reductions,
                 "max_basis": limits.max_basis},
            )
        for k in range(t):
            pairs[(k, t)] = pair_data(k, t)

    return _interreduce(G, order)


def _interreduce(G: Sequence[Poly], order: MonomialOrder) -> List[Poly]:
    # drop elements whose leading monomial is divisible by another's
    G = [g for g in G if not g.is_zero()]
    keep = []
    lms = [_lm(g, order) for g in G]
    for i, g in enumerate(G):
        if any(
            j != i and _divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i)
            for j in range(len(G))
        ):
            continue
        keep.append(g)
    # reduce tails
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = reduce_poly(g, others, order) if others else g
        if not r.is_zero():
            out.append(r.monic(order))
    out.sort(key=lambda p: order.key(_lm(p, order)))
    return out


@dataclass
class Ideal:
    """Finite generating set with an optional cached reduced Groebner basis."""

    generators: Tuple[Poly, ...]
    order: MonomialOrder
    table: VarTable
    limits: Limits = DEFAULT_LIMITS
    _gb: Optional[Tuple[Poly, ...]] = field(default=None, repr=False)

    @staticmethod
    def make(gens: Iterable[Poly], order: Optional[MonomialOrder] = None,
             table: Optional[VarTable] = None, limits: Limits = DEFAULT_LIMITS) -> "Ideal":
        gens = tuple(g for g in gens if not g.is_zero())
        if table is None:
            if not gens:
                raise PolyError("empty ideal needs an explicit table")
            table = gens[0].table
        order = order or grevlex(len(table))
        return Ideal(gens, order, table, limits)

    def groebner(self) -> Tuple[Poly, ...]:
        if self._gb is None:
            self._gb = tuple(buchberger(self.generators, self.order, self.limits))
        return self._gb

    def with_order(self, order: MonomialOrder) -> "Ideal":
        return Ideal(self.generators, order, self.table, self.limits)

    def is_trivial(self) -> bool:
        """True when 1 is in the ideal."""
        gb = self.groebner()
        return any(g.is_constant() and not g.is_zero() for g in gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.table != other.table:
            return False
        a = self.with_order(grevlex(len(self.table))).groebner()
        b = other.with_order(grevlex(len(self.table))).groebner()
        return a == b


def groebner_basis(I: Ideal) -> Ideal:
    """The ideal with its reduced basis as the generating set (cached)."""
    gb = I.groebner()
    return Ideal(gb, I.order, I.table, I.limits, _gb=gb)


def normal_form(p: Poly, I: Ideal) -> Poly:
    return reduce_poly(p, I.groebner(), I.order)


def member(p: Poly, I: Ideal) -> bool:
    return normal_form(p, I).is_zero()


def radical_member(p: Poly, I: Ideal, limits: Optional[Limits] = None) -> bool:
    """Rabinowitsch trick: 1 in I + <1 - t*p> in an extended ring."""
    if p.is_zero():
        return True
    aux = "_t"
    k = 0
    while aux in I.table.names:
        k += 1
        aux = f"_t{k}"
    ext = I.table.extend_params([aux])
    gens = [g.transport(ext) for g in I.generators]
    t = Poly.var(ext, aux)
    gens.append(Poly.const(ext, 1) - t * p.transport(ext))
    J = Ideal.make(gens, grevlex(len(ext)), ext, limits or I.limits)
    return J.is_trivial()


def eliminate(I: Ideal, keep_names: Sequence[str]) -> Ideal:
    """Generators of the elimination ideal, expressed over a table of `keep_names`."""
    keep_idx = {I.table.index(n) for n in keep_names}
    elim_idx = [i for i in range(len(I.table)) if i not in keep_idx]
    order = block_elim(len(I.table), elim_idx)
    gb = buchberger(I.generators, order, I.limits)
    sub = VarTable(
        tuple(I.table.names[i] for i in sorted(keep_idx)),
        tuple(I.table.kinds[i] for i in sorted(keep_idx)),
        tuple(None for _ in keep_idx),
    )
    kept = [g.transport(sub) for g in gb if g.variables() <= keep_idx]
    return Ideal.make(kept, grevlex(len(sub)), sub, I.limits)


def dimension(I: Ideal) -> int:
    """Krull dimension of the quotient ring, from the leading-term staircase.

    Returns -1 for the trivial ideal (empty variety).
    """
    if I.is_trivial():
        return -1
    gb = I.groebner()
    if not gb:
        return len(I.table)
    lms = [_lm(g, I.order) for g in gb]
    n = len(I.table)
    best = 0
    # maximal subset S of variables such that no leading monomial lives in k[S]
    for size in range(n, 0, -1):
        for S in itertools.combinations(range(n), size):
            sset = set(S)
            if all(any(e and i not in sset for i, e in enumerate(m)) for m in lms):
                return size
    return best


def standard_monomials(I: Ideal, cap: int = 100000) -> List[tuple]:
    """Monomials outside the leading-term ideal; requires dimension 0."""
    gb = I.groebner()
    lms = [_lm(g, I.order) for g in gb]
    n = len(I.table)
    seen = {(0,) * n}
    frontier = [(0,) * n]
    out = []
    while frontier:
        m = frontier.pop()
        if any(_divides(l, m) for l in lms):
            continue
        out.append(m)
        if len(out) > cap:
            raise ResourceLimitError(
                "standard monomial enumeration exceeded cap",
                {"count": len(out), "cap": cap},
            )
        for i in range(n):
            nxt = list(m)
            nxt[i] += 1
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return out


def degree_zero_dim(I: Ideal) -> int:
    """Vector-space dimension of the quotient; the solution count with multiplicity."""
    d = dimension(I)
    if d != 0:
        raise PolyError(f"degree requested on an ideal of dimension {d}")
    return len(standard_monomials(I))


def saturate(I: Ideal, e: Poly) -> Ideal:
    """Saturation I : e^infinity via the extended-ring elimination trick."""
    if e.is_zero() or e.is_constant():
        return I
    aux = "_s"
    k = 0
    while aux in I.table.names:
        k += 1
        aux = f"_s{k}"
    ext = I.table.extend_params([aux])
    gens = [g.transport(ext) for g in I.generators]
    t = Poly.var(ext, aux)
    gens.append(Poly.const(ext, 1) - t * e.transport(ext))
    J = Ideal.make(gens, grevlex(len(ext)), ext, I.limits)
    E = eliminate(J, I.table.names)
    out = [g.transport(I.table) for g in E.generators]
    return Ideal.make(out, I.order, I.table, I.limits) if out else \
        Ideal(tuple(), I.order, I.table, I.limits)


def exact_div(p: Poly, d: Poly, order: Optional[MonomialOrder] = None):
    """Quotient p/d when the division is exact, else None."""
    if d.is_zero():
        return None
    order = order or grevlex(len(p.table))
    lm_d = _lm(d, order)
    lc_d = d.terms[lm_d]
    work = dict(p.terms)
    quot = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if not _divides(lm_d, m):
            return None
        q = _quot(m, lm_d)
        f = c / lc_d
        quot[q] = f
        for mg, cg in d.terms.items():
            if mg == lm_d:
                continue
            key = tuple(a + b for a, b in zip(mg, q))
            s = work.get(key, QI_ZERO) - f * cg
            if s.is_zero():
                work.pop(key, None)
            else:
                work[key] = s
    return Poly(p.table, quot)


# -- parametric pseudo-reduction -------------------------------------------------


def coefficients_in(p: Poly, main_indices: Sequence[int]) -> dict:
    """Split p as a sum over monomials in the main block with parameter
    polynomials as coefficients: {main exponent tuple -> Poly}."""
    main = tuple(main_indices)
    buckets = {}
    for m, c in p.terms.items():
        key = tuple(m[i] if i in main else 0 for i in range(len(m)))
        rest = tuple(0 if i in main else m[i] for i in range(len(m)))
        bucket = buckets.setdefault(key, {})
        bucket[rest] = bucket.get(rest, QI_ZERO) + c
    return {k: Poly(p.table, v) for k, v in buckets.items()}


def parametric_normal_form(
    p: Poly, I: Ideal, param_names: Sequence[str]
) -> Tuple[Poly, List[Poly]]:
    """Pseudo-remainder of p modulo I's generators, treating `param_names`
    as coefficients.

    Returns (remainder, excluded): the reduction is valid wherever none of
    the `excluded` parameter polynomials vanish.
    """
    table = I.table
    params = {table.index(n) for n in param_names}
    main = [i for i in range(len(table)) if i not in params]
    morder = grevlex(len(table))

    def main_part(m):
        return tuple(m[i] if i in set(main) else 0 for i in range(len(m)))

    main_set = set(main)

    def split_lead(g):
        # leading main-monomial of g and its parameter-polynomial coefficient
        best = None
        for m in g.terms:
            mp = tuple(m[i] if i in main_set else 0 for i in range(len(m)))
            if best is None or morder.key(mp) > morder.key(best):
                best = mp
        coeff = {}
        for m, c in g.terms.items():
            if tuple(m[i] if i in main_set else 0 for i in range(len(m))) == best:
                rest = tuple(0 if i in main_set else m[i] for i in range(len(m)))
                coeff[rest] = c
        return best, Poly(g.table, coeff)

    leads = [split_lead(g) for g in I.generators]
    excluded: List[Poly] = []

    def note_excluded(lc: Poly):
        if lc.is_constant():
            return
        if all(lc != e for e in excluded):
            excluded.append(lc)

    work = p
    guard = 0
    while True:
        guard += 1
        if guard > 20000:
            raise ResourceLimitError(
                "parametric reduction did not terminate",
                {"steps": guard, "terms": len(work.terms)},
            )
        # largest reducible main-monomial of work
        target = None
        hit = None
        for m in work.terms:
            mp = main_part(m)
            for (lm_g, lc_g), g in zip(leads, I.generators):
                if _divides(lm_g, mp):
                    if target is None or morder.key(mp) > morder.key(target):
                        target = mp
                        hit = (lm_g, lc_g, g)
                    break
        if target is None:
            # strip excluded-locus factors: off their zero sets the
            # remainder's vanishing is unchanged
            changed = True
            while changed and not work.is_zero():
                changed = False
                for e in excluded:
                    q = exact_div(work, e)
                    if q is not None:
                        work = q
                        changed = True
            return work, excluded
        lm_g, lc_g, g = hit
        coeffs = coefficients_in(work, main)
        c_p = coeffs[target]
        note_excluded(lc_g)
        shift = _quot(target, lm_g)
        work = work * lc_g - g.scale_monomial(shift, QI_ONE) * c_p
