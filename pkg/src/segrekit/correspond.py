"""Holomorphic correspondences as graph ideals in the conjugated parameter
blocks (wb for the source, wpb for the target): construction from a map,
invariance verification, fibers and branch counting, splitting, composition."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .gaussian import QI, QI_ONE, QI_ZERO, GaussianRational, qi_sqrt
from .ideal import (Ideal, coefficients_in, degree_zero_dim, dimension,
                    eliminate, parametric_normal_form, saturate)
from .linalg import rank
from .manifold import CRManifold, ManifoldError, tangent_basis
from .orders import grevlex
from .parsing import parse_map_text, parse_poly
from .poly import Poly, PolyError, VarTable
from .segre import inversion_set, segre_variety
from .solve import solve_zero_dim


class CorrespondenceError(ValueError):
    pass


class ExcludedLocusError(CorrespondenceError):
    pass


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlgebraicMap:
    """Rational map between charts: components as (numerator, denominator)
    pairs over the source manifold's variable table."""

    table: VarTable
    components: tuple  # of (Poly, Poly)

    @staticmethod
    def from_text(text: str, source: CRManifold) -> "AlgebraicMap":
        spec = parse_map_text(text)
        if spec.zvars != source.zvar_names:
            raise CorrespondenceError(
                f"map variables {spec.zvars} do not match source {source.zvar_names}")
        comps = []
        for num_src, den_src in spec.components:
            num = parse_poly(num_src, source.table)
            den = (parse_poly(den_src, source.table) if den_src is not None
                   else Poly.const(source.table, 1))
            if den.is_zero():
                raise CorrespondenceError("zero denominator in map component")
            comps.append((num, den))
        return AlgebraicMap(source.table, tuple(comps))

    @staticmethod
    def identity(M: CRManifold) -> "AlgebraicMap":
        one = Poly.const(M.table, 1)
        return AlgebraicMap(
            M.table,
            tuple((Poly.var(M.table, n), one) for n in M.zvar_names),
        )

    def __len__(self):
        return len(self.components)

    def apply(self, p: Sequence[GaussianRational]) -> Tuple[GaussianRational, ...]:
        names = self.table.zvars()
        binding = {n: GaussianRational.from_value(v) for n, v in zip(names, p)}
        out = []
        for num, den in self.components:
            d = den.eval(binding)
            if d.is_zero():
                raise ZeroDivisionError("point lies on a denominator zero set")
            out.append(num.eval(binding) / d)
        return tuple(out)

    def jacobian_at(self, p: Sequence[GaussianRational]) -> List[List[GaussianRational]]:
        names = self.table.zvars()
        binding = {n: GaussianRational.from_value(v) for n, v in zip(names, p)}
        J = []
        for num, den in self.components:
            dv = den.eval(binding)
            if dv.is_zero():
                raise ZeroDivisionError("point lies on a denominator zero set")
            nv = num.eval(binding)
            row = []
            for n in names:
                row.append((num.diff(n).eval(binding) * dv - nv * den.diff(n).eval(binding))
                           / (dv * dv))
            J.append(row)
        return J


@dataclass(frozen=True)
class RankReport:
    full_rank: bool
    rank: int
    expected: int
    tangent_rank: Optional[int] = None


def max_rank_check(f: AlgebraicMap, p, M: Optional[CRManifold] = None) -> RankReport:
    """Jacobian rank at p against min(n, N); optionally also the rank of
    df restricted to the holomorphic tangent space of M at p."""
    J = f.jacobian_at(p)
    n = len(f.table.zvars())
    expected = min(n, len(f.components))
    r = rank(J)
    trank = None
    if M is not None:
        V = tangent_basis(M, p)
        JV = [[sum((J[i][k] * v[k] for k in range(n)), QI_ZERO) for v in V]
              for i in range(len(J))]
        trank = rank(JV)
    return RankReport(r == expected, r, expected, trank)


# -- rational point sampling -----------------------------------------------------


def sample_variety_points(gens: Sequence[Poly], table: VarTable, rng: random.Random,
                          count: int, attempts: int = 400) -> List[tuple]:
    """Rational points on V(gens) by randomizing free variables and solving
    the remaining ones one univariate equation at a time."""
    from .solve import _univariate_roots

    names = table.names
    points = []
    tried = 0
    while len(points) < count and tried < attempts:
        tried += 1
        bound: Dict[str, GaussianRational] = {}
        live = [g for g in gens if not g.is_zero()]
        ok = True
        while ok:
            subs = {n: Poly.const(table, v) for n, v in bound.items()}
            live = [g.substitute(subs) for g in live]
            live = [g for g in live if not g.is_zero()]
            if any(g.is_constant() for g in live):
                ok = False
                break
            if not live:
                break
            solved = False
            for gi, g in enumerate(live):
                vs = g.variables()
                if len(vs) == 1:
                    vi = next(iter(vs))
                    roots = _univariate_roots(g, vi)
                    if not roots:
                        ok = False
                        break
                    val, _ = rng.choice(roots)
                    bound[names[vi]] = val
                    live = live[:gi] + live[gi + 1:]
                    solved = True
                    break
            if not ok:
                break
            if not solved:
                # bind one random unbound variable occurring in the system
                occupied = set()
                for g in live:
                    occupied |= g.variables()
                free = [names[i] for i in sorted(occupied) if names[i] not in bound]
                if not free:
                    ok = False
                    break
                bound[rng.choice(free)] = QI(rng.randint(-6, 6), rng.randint(-2, 2))
        if not ok or any(g for g in live):
            continue
        for n in names:
            if n not in bound:
                bound[n] = QI(rng.randint(-6, 6), rng.randint(-2, 2))
        pt = tuple(bound[n] for n in names)
        if pt not in points:
            points.append(pt)
    if len(points) < count:
        raise SamplingError(
            f"found {len(points)}/{count} rational points after {tried} attempts "
            f"(randomized back-substitution on {[str(g) for g in gens]})")
    return points


def sample_segre_points(M: CRManifold, w, rng: random.Random, count: int) -> List[tuple]:
    """Rational points on Q_w."""
    Q = segre_variety(M, w)
    return sample_variety_points(Q.ideal.generators, Q.ideal.table, rng, count)


@dataclass
class InvarianceReport:
    checked: int
    passed: int
    failures: list

    @property
    def ok(self) -> bool:
        return self.checked > 0 and self.passed == self.checked


def verify_invariance(M: CRManifold, Mp: CRManifold, f: AlgebraicMap,
                      base_points: Sequence[tuple], per_point: int = 10,
                      seed: int = 0) -> InvarianceReport:
    """Exact check of f(Q_p) subset Q'_{f(p)} on sampled rational points.

    base_points must lie on M.  Non-invariant maps (including maps whose
    images leave M') show up as counted failures, not exceptions."""
    rng = random.Random(seed)
    checked = passed = 0
    failures = []
    names_p = Mp.zvar_names
    for p in base_points:
        if not M.contains(p):
            raise ManifoldError(f"base point {p} is not on the source manifold")
        fp = f.apply(p)
        fpbar = tuple(v.conjugate() for v in fp)
        zs = sample_segre_points(M, p, rng, per_point)
        for z in zs:
            fz = f.apply(z)
            binding = {}
            for n, a, b in zip(names_p, fz, fpbar):
                binding[n] = a
                binding["~" + n] = b
            vals = [r.eval(binding) for r in Mp.rho]
            checked += len(vals)
            good = sum(1 for v in vals if v.is_zero())
            passed += good
            if good != len(vals):
                failures.append({"p": tuple(str(x) for x in p),
                                 "z": tuple(str(x) for x in z)})
    return InvarianceReport(checked, passed, failures)


# -- the correspondence graph ------------------------------------------------------


@dataclass
class Correspondence:
    """Graph ideal in (wb-block, wpb-block): conjugated source and target
    parameters.  A pair (w, w') lies on the correspondence when
    (conj(w), conj(w')) satisfies the graph ideal."""

    graph: Ideal
    source: CRManifold
    target: CRManifold
    wb_names: tuple
    wpb_names: tuple
    excluded: tuple = ()
    fiber_degree: Optional[int] = None


def _param_table(M: CRManifold, Mp: CRManifold) -> Tuple[VarTable, tuple, tuple]:
    wb = tuple("wb_" + n for n in M.zvar_names)
    wpb = tuple("wpb_" + n for n in Mp.zvar_names)
    return VarTable.make(list(wb) + list(wpb), conjugates=False), wb, wpb


def build_correspondence(M: CRManifold, Mp: CRManifold, f: AlgebraicMap) -> Correspondence:
    """Graph ideal of A = {(w, w'): f(Q_w) subset Q'_{w'}} by parametric
    reduction of rho'(f(z), wpb) against the symbolic Segre ideal of M."""
    wb = tuple("wb_" + n for n in M.zvar_names)
    wpb = tuple("wpb_" + n for n in Mp.zvar_names)
    joint = VarTable.make(list(M.zvar_names), params=list(wb) + list(wpb),
                          conjugates=False)
    rename_wb = {"~" + n: w for n, w in zip(M.zvar_names, wb)}
    segre_gens = [r.transport(joint, rename_wb) for r in M.rho]
    Qw = Ideal.make(segre_gens, grevlex(len(joint)), joint)

    nums = [num.transport(joint) for num, _ in f.components]
    dens = [den.transport(joint) for _, den in f.components]

    gens: List[Poly] = []
    excluded: List[Poly] = []
    z_idx = [joint.index(n) for n in M.zvar_names]
    for rp in Mp.rho:
        # rho'(f(z), wpb) with denominators cleared
        degs = [rp.degree_in([rp.table.index(n)]) for n in Mp.zvar_names]
        acc = Poly.zero(joint)
        for mono, c in rp.terms.items():
            piece = Poly.const(joint, c)
            for k, n in enumerate(Mp.zvar_names):
                a = mono[rp.table.index(n)]
                b = mono[rp.table.index("~" + n)]
                piece = piece * nums[k] ** a * dens[k] ** (degs[k] - a)
                if b:
                    piece = piece * Poly.var(joint, wpb[k]) ** b
            acc = acc + piece
        rem, exc = parametric_normal_form(acc, Qw, list(wb) + list(wpb))
        for e in exc:
            if all(e != x for x in excluded):
                excluded.append(e)
        gens.extend(coefficients_in(rem, z_idx).values())

    ptable, wb, wpb = _param_table(M, Mp)
    gens = [g.transport(ptable) for g in gens if not g.is_zero()]
    if not gens:
        raise CorrespondenceError("empty graph ideal: the data are inconsistent")
    graph = Ideal.make(gens, grevlex(len(ptable)), ptable)
    excluded = tuple(e.transport(ptable) for e in excluded)
    # strip components supported on the excluded locus
    for e in excluded:
        graph = saturate(graph, e)
    if not graph.generators:
        raise CorrespondenceError("graph ideal collapsed under saturation")
    return Correspondence(graph, M, Mp, wb, wpb, excluded)


def relation_correspondence(M: CRManifold, Mp: CRManifold,
                            relation_sources: Sequence[str]) -> Correspondence:
    """Correspondence from explicit graph relations in (wb_*, wpb_*), for
    multivalued maps that are not single holomorphic maps (e.g. w'^s = w^r)."""
    ptable, wb, wpb = _param_table(M, Mp)
    gens = [parse_poly(src, ptable) for src in relation_sources]
    graph = Ideal.make(gens, grevlex(len(ptable)), ptable)
    return Correspondence(graph, M, Mp, wb, wpb)


def power_correspondence(M: CRManifold, Mp: CRManifold, r: int, s: int) -> Correspondence:
    """Graph of F(z) = z^(r/s) componentwise: wpb_k^s = wb_k^r."""
    rels = [f"wpb_{n}^{s} - wb_{n}^{r}" for n in Mp.zvar_names]
    return relation_correspondence(M, Mp, rels)


@dataclass
class FiberResult:
    degree: int
    solutions: Optional[list]  # [(target point, multiplicity)] or None


def fiber(C: Correspondence, w, reverse: bool = False) -> FiberResult:
    """Specialize the graph at a source point w (or a target point, when
    reverse) and count/solve the zero-dimensional fiber."""
    fixed_names = C.wpb_names if reverse else C.wb_names
    free_names = C.wb_names if reverse else C.wpb_names
    wbar = tuple(GaussianRational.from_value(x).conjugate() for x in w)
    if len(wbar) != len(fixed_names):
        raise CorrespondenceError("point has the wrong number of coordinates")
    binding = dict(zip(fixed_names, wbar))
    for e in C.excluded:
        if set(C.graph.table.names[i] for i in e.variables()) <= set(fixed_names):
            if e.eval(binding).is_zero():
                raise ExcludedLocusError(
                    f"point lies on the excluded locus {e}")
    subs = {n: Poly.const(C.graph.table, v) for n, v in binding.items()}
    ftable = VarTable.make(list(free_names), conjugates=False)
    gens = [g.substitute(subs) for g in C.graph.generators]
    gens = [g.transport(ftable) for g in gens if not g.is_zero()]
    if not gens:
        raise CorrespondenceError("fiber is the whole space (empty specialized ideal)")
    I = Ideal.make(gens, grevlex(len(ftable)), ftable)
    d = dimension(I)
    if d != 0:
        raise CorrespondenceError(f"fiber has positive dimension {d}")
    deg = degree_zero_dim(I)
    sols = solve_zero_dim(I)
    out = None
    if sols is not None:
        out = []
        for pt, mult in sols:
            # solutions are conjugated coordinates; conjugate back
            coords = tuple(pt[n].conjugate() for n in free_names)
            out.append((coords, mult))
    return FiberResult(deg, out)


def splits_at(C: Correspondence, q) -> bool:
    """Splitting criterion: every fiber solution is simple and the target
    Segre map is injective there (target inversion degree 1)."""
    from .segre import essential_finiteness

    fr = fiber(C, q)
    if fr.solutions is None:
        raise CorrespondenceError("fiber solutions are not triangular; cannot decide")
    if any(mult != 1 for _, mult in fr.solutions):
        return False
    for wp, _ in fr.solutions:
        finite, deg = essential_finiteness(C.target, wp)
        if not finite or deg != 1:
            return False
    return True


def compose(C1: Correspondence, C2: Correspondence) -> Correspondence:
    """One algebraic continuation step: join over the middle block and
    eliminate it."""
    if C1.target.rho != C2.source.rho:
        raise CorrespondenceError("inner manifolds of the composition differ")
    mid = tuple("mb_" + n for n in C1.target.zvar_names)
    joint = VarTable.make(list(C1.wb_names) + list(mid) + list(C2.wpb_names),
                          conjugates=False)
    g1 = [g.transport(joint, dict(zip(C1.wpb_names, mid))) for g in C1.graph.generators]
    g2 = [g.transport(joint, dict(zip(C2.wb_names, mid))) for g in C2.graph.generators]
    J = Ideal.make(g1 + g2, grevlex(len(joint)), joint)
    E = eliminate(J, list(C1.wb_names) + list(C2.wpb_names))
    ptable, wb, wpb = _param_table(C1.source, C2.target)
    gens = [g.transport(ptable) for g in E.generators]
    graph = (Ideal.make(gens, grevlex(len(ptable)), ptable) if gens
             else Ideal(tuple(), grevlex(len(ptable)), ptable))
    # ledgers involving the eliminated middle block cannot be expressed in
    # the composed ring and are dropped; the rest carry over
    exc = []
    for e in C1.excluded:
        used = {C1.graph.table.names[i] for i in e.variables()}
        if used <= set(C1.wb_names):
            exc.append(e.transport(ptable))
    for e in C2.excluded:
        used = {C2.graph.table.names[i] for i in e.variables()}
        if used <= set(C2.wpb_names):
            exc.append(e.transport(ptable))
    return Correspondence(graph, C1.source, C2.target, wb, wpb, tuple(exc))
