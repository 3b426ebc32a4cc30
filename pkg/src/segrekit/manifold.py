"""Real-algebraic CR submanifolds: reality/genericity checks, the polar
(complexification), projectivization, and exact Levi-form signatures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .gaussian import QI, QI_ONE, QI_ZERO, GaussianRational
from .ideal import Ideal
from .linalg import hermitian_signature, nullspace, rank
from .orders import grevlex
from .parsing import ParseError, parse_manifold_text, parse_poly
from .poly import CONJ_VAR, PARAM_VAR, Z_VAR, Poly, PolyError, VarTable

Point = Tuple[GaussianRational, ...]


class ManifoldError(ValueError):
    pass


@dataclass(frozen=True)
class CRManifold:
    """Generic real-algebraic CR submanifold of C^n (or a projective chart),
    cut out by d real defining polynomials in (z, ~z)."""

    table: VarTable
    rho: tuple          # d polynomials
    chart: object = "affine"   # "affine" or homogeneous chart index

    @property
    def n(self) -> int:
        return len(self.table.indices(Z_VAR))

    @property
    def d(self) -> int:
        return len(self.rho)

    @property
    def m(self) -> int:
        return self.n - self.d

    @property
    def zvar_names(self) -> tuple:
        return self.table.zvars()

    @staticmethod
    def from_polys(zvars: Sequence[str], rho: Sequence[Poly], chart="affine") -> "CRManifold":
        return CRManifold(rho[0].table, tuple(rho), chart)

    @staticmethod
    def from_text(text: str) -> "CRManifold":
        spec = parse_manifold_text(text)
        table = VarTable.make(spec.zvars)
        rho = tuple(parse_poly(src, table) for src in spec.rho_sources)
        return CRManifold(table, rho, spec.chart)

    def point_bindings(self, p: Point) -> dict:
        """Bind z-variables to p and conjugate variables to conj(p)."""
        names = self.zvar_names
        if len(p) != len(names):
            raise ManifoldError(f"point has {len(p)} coordinates, expected {len(names)}")
        out = {}
        for name, v in zip(names, p):
            v = GaussianRational.from_value(v)
            out[name] = v
            out["~" + name] = v.conjugate()
        return out

    def contains(self, p: Point) -> bool:
        b = self.point_bindings(p)
        return all(r.eval(b).is_zero() for r in self.rho)


def check_reality(M: CRManifold) -> bool:
    """True iff every defining polynomial equals its conjugate."""
    return all(r.is_real() for r in M.rho)


def genericity_rank(M: CRManifold, p: Point) -> int:
    """Rank of the d x n matrix of antiholomorphic gradients at p in M."""
    if not M.contains(p):
        raise ManifoldError("point does not lie on the manifold")
    b = M.point_bindings(p)
    A = [
        [r.diff("~" + name).eval(b) for name in M.zvar_names]
        for r in M.rho
    ]
    return rank(A)


@dataclass(frozen=True)
class PolarVariety:
    """The complexification {(z, zeta): rho_j(z, zeta) = 0} with zeta an
    independent variable block replacing ~z."""

    ideal: Ideal
    zeta_names: tuple


def polar(M: CRManifold) -> PolarVariety:
    if not check_reality(M):
        raise ManifoldError("defining polynomials are not real")
    zeta = tuple("zeta_" + name for name in M.zvar_names)
    table = VarTable.make(list(M.zvar_names) + list(zeta), conjugates=False)
    rename = {"~" + name: z for name, z in zip(M.zvar_names, zeta)}
    gens = [r.transport(table, rename) for r in M.rho]
    return PolarVariety(Ideal.make(gens, grevlex(len(table)), table), zeta)


def _bidegrees(p: Poly) -> Tuple[int, int]:
    zi = p.table.indices(Z_VAR)
    ci = p.table.indices(CONJ_VAR)
    dz = max((sum(m[i] for i in zi) for m in p.terms), default=0)
    dc = max((sum(m[i] for i in ci) for m in p.terms), default=0)
    return dz, dc


def homogenize(M: CRManifold, hom_var: str = "z0") -> CRManifold:
    """Bihomogenize each defining polynomial with a new chart variable."""
    if M.chart != "affine":
        raise ManifoldError("manifold is already projective")
    new_vars = [hom_var] + list(M.zvar_names)
    table = VarTable.make(new_vars)
    rho = []
    for r in M.rho:
        dz, dc = _bidegrees(r)
        zi = r.table.indices(Z_VAR)
        ci = r.table.indices(CONJ_VAR)
        lifted = r.transport(table)
        h0 = table.index(hom_var)
        c0 = table.index("~" + hom_var)
        terms = {}
        for m, c in r.terms.items():
            new = [0] * len(table)
            for i, e in enumerate(m):
                if e:
                    new[table.index(r.table.names[i])] = e
            new[h0] = dz - sum(m[i] for i in zi)
            new[c0] = dc - sum(m[i] for i in ci)
            terms[tuple(new)] = c
        rho.append(Poly(table, terms))
    return CRManifold(table, tuple(rho), chart=0)


def dehomogenize(M: CRManifold, chart_index: int) -> CRManifold:
    """Restrict to the affine chart where the given homogeneous coordinate is 1."""
    names = M.zvar_names
    if not 0 <= chart_index < len(names):
        raise ManifoldError(f"chart index {chart_index} out of range")
    keep = [nm for k, nm in enumerate(names) if k != chart_index]
    table = VarTable.make(keep)
    drop = names[chart_index]
    rho = []
    for r in M.rho:
        one = Poly.const(r.table, 1)
        s = r.substitute({drop: one, "~" + drop: one})
        rho.append(s.transport(table))
    return CRManifold(table, tuple(rho), chart="affine")


@dataclass(frozen=True)
class LeviReport:
    point: tuple
    conormal: tuple
    signature: Tuple[int, int, int]  # (positives, negatives, zeros)

    @property
    def mixed(self) -> bool:
        return self.signature[0] >= 1 and self.signature[1] >= 1


def tangent_basis(M: CRManifold, p: Point) -> List[List[GaussianRational]]:
    """Basis of the holomorphic tangent space H_pM (kernel of the
    holomorphic gradients)."""
    b = M.point_bindings(p)
    A = [[r.diff(name).eval(b) for name in M.zvar_names] for r in M.rho]
    return nullspace(A, M.n)


def levi_signature(M: CRManifold, p: Point, c: Sequence) -> LeviReport:
    """Exact signature of the Levi form at p in the conormal direction c.

    The form is sum_j c_j * Hess(rho_j) restricted to H_pM, diagonalized by
    rational congruence on its realification."""
    c = [Fraction(x) for x in c]
    if len(c) != M.d:
        raise ManifoldError(f"conormal needs {M.d} coefficients")
    if all(x == 0 for x in c):
        raise ManifoldError("conormal must be nonzero")
    if genericity_rank(M, p) != M.d:
        raise ManifoldError("manifold is not generic at the point")
    b = M.point_bindings(p)
    names = M.zvar_names
    n = M.n
    H = [[QI_ZERO] * n for _ in range(n)]
    for coef, r in zip(c, M.rho):
        if coef == 0:
            continue
        for j, nj in enumerate(names):
            dj = r.diff(nj)
            for k, nk in enumerate(names):
                H[j][k] = H[j][k] + QI(coef) * dj.diff("~" + nk).eval(b)
    V = tangent_basis(M, p)
    if len(V) != M.m:
        raise ManifoldError("degenerate holomorphic tangent space at the point")
    # restrict: B = V^H H V
    m = len(V)
    B = [[QI_ZERO] * m for _ in range(m)]
    for a in range(m):
        for bb in range(m):
            s = QI_ZERO
            for j in range(n):
                for k in range(n):
                    s = s + V[a][j].conjugate() * H[j][k] * V[bb][k]
            B[a][bb] = s
    sig = hermitian_signature(B)
    return LeviReport(tuple(p), tuple(c), sig)


@dataclass(frozen=True)
class ProbeResult:
    point: tuple
    conormal: tuple
    signature: Tuple[int, int, int]
    mixed: bool


def pseudoconcavity_probe(M: CRManifold, points: Sequence[Point],
                          conormal_grid: Optional[Sequence[Sequence]] = None) -> List[ProbeResult]:
    """Check mixed Levi signature on sampled points and conormal directions.

    A probe over finitely many samples, not a proof.  For d = 1 the grid
    defaults to {+1, -1}, which is exhaustive per point up to scaling."""
    if conormal_grid is None:
        if M.d == 1:
            conormal_grid = [(1,), (-1,)]
        else:
            raise ManifoldError("conormal grid required when d > 1")
    out = []
    for p in points:
        for c in conormal_grid:
            rep = levi_signature(M, p, c)
            out.append(ProbeResult(tuple(p), tuple(c), rep.signature, rep.mixed))
    return out
