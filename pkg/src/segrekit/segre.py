"""Segre varieties, inversion sets, essential finiteness, Segre sets and the
minimality criterion."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .gaussian import QI, QI_ONE, QI_ZERO, GaussianRational
from .ideal import (Ideal, degree_zero_dim, dimension, eliminate, member,
                    normal_form, parametric_normal_form, coefficients_in)
from .manifold import CRManifold, ManifoldError, check_reality
from .orders import grevlex
from .poly import Poly, VarTable

SYMBOLIC = "symbolic"


class InconclusiveError(RuntimeError):
    pass


def _ztable(M: CRManifold, params: Sequence[str] = ()) -> VarTable:
    return VarTable.make(list(M.zvar_names) + list(params), conjugates=False)


def _conj_point(w) -> Tuple[GaussianRational, ...]:
    return tuple(GaussianRational.from_value(x).conjugate() for x in w)


@dataclass(frozen=True)
class SegreVariety:
    """Q_w: the z-variety cut out by the defining polynomials with the
    conjugate slot frozen at w-bar (or at a symbolic parameter block)."""

    base: CRManifold
    parameter: object          # tuple of coordinates, or SYMBOLIC
    ideal: Ideal
    param_names: tuple = ()


def segre_variety(M: CRManifold, w=SYMBOLIC) -> SegreVariety:
    if not check_reality(M):
        raise ManifoldError("defining polynomials are not real")
    if w == SYMBOLIC:
        params = tuple("wb_" + name for name in M.zvar_names)
        table = _ztable(M, params)
        rename = {"~" + name: p for name, p in zip(M.zvar_names, params)}
        gens = [r.transport(table, rename) for r in M.rho]
        return SegreVariety(M, SYMBOLIC, Ideal.make(gens, grevlex(len(table)), table), params)
    table = _ztable(M)
    wbar = _conj_point(w)
    gens = []
    for r in M.rho:
        s = r.substitute({"~" + name: Poly.const(r.table, v)
                          for name, v in zip(M.zvar_names, wbar)})
        gens.append(s.transport(table))
    return SegreVariety(M, tuple(GaussianRational.from_value(x) for x in w),
                        Ideal.make(gens, grevlex(len(table)), table))


def in_segre_variety(M: CRManifold, z, w) -> bool:
    """Exact test z in Q_w by evaluating every defining polynomial."""
    binding = {}
    for name, zv, wv in zip(M.zvar_names, z, w):
        binding[name] = GaussianRational.from_value(zv)
        binding["~" + name] = GaussianRational.from_value(wv).conjugate()
    return all(r.eval(binding).is_zero() for r in M.rho)


def check_symmetry(M: CRManifold, z, w) -> bool:
    """z in Q_w  <=>  w in Q_z (must always hold for real defining data)."""
    return in_segre_variety(M, z, w) == in_segre_variety(M, w, z)


class GraphFormError(ValueError):
    pass


def _det(A: List[List[Poly]]) -> Poly:
    n = len(A)
    if n == 1:
        return A[0][0]
    table = A[0][0].table
    out = Poly.zero(table)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * _det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def graph_form(Q: SegreVariety, zeta_names: Sequence[str]):
    """Solve the generators for the zeta block: zeta = h(xi, w-bar), as
    rational functions (num, den).  Requires the generators to be jointly
    linear in the zeta block with invertible coefficient matrix."""
    table = Q.ideal.table
    zeta_idx = [table.index(n) for n in zeta_names]
    gens = list(Q.ideal.generators)
    if len(gens) != len(zeta_names):
        raise GraphFormError(
            f"need exactly {len(gens)} zeta variables for {len(gens)} generators")
    for g in gens:
        if g.degree_in(zeta_idx) > 1:
            raise GraphFormError("generators are not linear in the zeta block")
    A = []
    b = []
    zero_sub = {n: Poly.const(table, 0) for n in zeta_names}
    for g in gens:
        A.append([g.diff(n) for n in zeta_names])
        b.append(g.substitute(zero_sub))
    det = _det(A)
    if det.is_zero():
        raise GraphFormError("singular zeta-block Jacobian; try another split")
    h = {}
    n = len(gens)
    for k in range(n):
        # Cramer: det * h_k = -det(A with column k replaced by b)
        Ak = [[b[i] if j == k else A[i][j] for j in range(n)] for i in range(n)]
        h[zeta_names[k]] = (-_det(Ak), det)
    # identity check: A*num + det*b = 0
    for i, g in enumerate(gens):
        s = Poly.zero(table)
        for k in range(n):
            s = s + A[i][k] * h[zeta_names[k]][0]
        s = s + det * b[i]
        if not s.is_zero():
            raise GraphFormError("graph solution failed the identity check")
    return h


@dataclass(frozen=True)
class InversionSet:
    """Ideal (in conjugated coordinates zb_*) of {z : Q_w subset Q_z},
    with the genericity ledger from the parametric reduction."""

    ideal: Ideal
    excluded: tuple
    param_names: tuple

    def solutions_in_z(self):
        """Exact solutions mapped back to z-coordinates (conjugated)."""
        from .solve import solve_zero_dim

        sols = solve_zero_dim(self.ideal)
        if sols is None:
            return None
        out = []
        for pt, mult in sols:
            z = tuple(pt["zb_" + n].conjugate() for n in self.base_names())
            out.append((z, mult))
        return out

    def base_names(self):
        return tuple(n[len("zb_"):] for n in self.param_names)


def inversion_set(M: CRManifold, w=SYMBOLIC) -> InversionSet:
    """I_w as an ideal in the conjugate coordinates zb of z.

    Built from the containment Q_w subset Q_z: every defining polynomial
    rho_j(t, zb) must reduce to zero against the ideal of Q_w in t."""
    zb = tuple("zb_" + name for name in M.zvar_names)
    tvars = tuple("t_" + name for name in M.zvar_names)
    symbolic = w == SYMBOLIC
    wb = tuple("wb_" + name for name in M.zvar_names) if symbolic else ()
    params = zb + wb
    table = VarTable.make(list(tvars) + list(params), conjugates=False)

    def to_t(r, conj_target):
        rename = {name: t for name, t in zip(M.zvar_names, tvars)}
        rename.update({"~" + name: c for name, c in zip(M.zvar_names, conj_target)})
        return r.transport(table, rename)

    if symbolic:
        qw_gens = [to_t(r, wb) for r in M.rho]
    else:
        wbar = _conj_point(w)
        qw_gens = []
        for r in M.rho:
            s = r.substitute({"~" + name: Poly.const(r.table, v)
                              for name, v in zip(M.zvar_names, wbar)})
            qw_gens.append(to_t(s, zb))  # conj vars already substituted
    Qw = Ideal.make(qw_gens, grevlex(len(table)), table)

    gens = []
    excluded: List[Poly] = []
    t_indices = [table.index(t) for t in tvars]
    for r in M.rho:
        p = to_t(r, zb)
        rem, exc = parametric_normal_form(p, Qw, params)
        for e in exc:
            if all(e != x for x in excluded):
                excluded.append(e)
        gens.extend(coefficients_in(rem, t_indices).values())

    ptable = VarTable.make(list(params), conjugates=False)
    gens = [g.transport(ptable) for g in gens if not g.is_zero()]
    excluded = [e.transport(ptable) for e in excluded]
    ideal = Ideal.make(gens, grevlex(len(ptable)), ptable) if gens else \
        Ideal(tuple(), grevlex(len(ptable)), ptable)
    inv = InversionSet(ideal, tuple(excluded), zb)
    return inv


def essential_finiteness(M: CRManifold, w) -> Tuple[bool, Optional[int]]:
    """(True, degree R) when the inversion set at w is zero-dimensional."""
    inv = inversion_set(M, w)
    if not inv.ideal.generators:
        return False, None
    if dimension(inv.ideal) != 0:
        return False, None
    return True, degree_zero_dim(inv.ideal)


def segre_map_locally_injective(M: CRManifold, q) -> bool:
    """Algebraic proxy: Q_z = Q_q forces z = q, i.e. inversion degree 1."""
    finite, deg = essential_finiteness(M, q)
    return finite and deg == 1


@dataclass(frozen=True)
class SegreSetChain:
    base_point: tuple
    ideals: tuple   # ideal of the Zariski closure of Q^j, over the z-table
    dims: tuple


def segre_sets(M: CRManifold, p, j_max: int) -> SegreSetChain:
    """Iterated Segre sets Q^j_p as elimination ideals, with dimensions."""
    if not M.contains(p):
        raise ManifoldError("base point does not lie on the manifold")
    ztab = _ztable(M)
    Q1 = segre_variety(M, p).ideal
    ideals = [Q1]
    dims = [dimension(Q1)]
    n = M.n
    uvars = tuple("u_" + name for name in M.zvar_names)
    joint = VarTable.make(list(M.zvar_names) + list(uvars), conjugates=False)
    for _ in range(1, j_max):
        prev = ideals[-1]
        gens = []
        # conjugate of previous Segre set, in the u-block
        rename_u = {name: u for name, u in zip(M.zvar_names, uvars)}
        for g in prev.generators:
            cg = Poly(g.table, {m: c.conjugate() for m, c in g.terms.items()})
            gens.append(cg.transport(joint, rename_u))
        # polar constraint rho(z, u)
        rename_polar = {"~" + name: u for name, u in zip(M.zvar_names, uvars)}
        for r in M.rho:
            gens.append(r.transport(joint, rename_polar))
        J = Ideal.make(gens, grevlex(len(joint)), joint)
        nxt = eliminate(J, M.zvar_names)
        nxt = nxt if nxt.generators else Ideal(tuple(), grevlex(len(ztab)), ztab)
        # transport onto the shared z-table for comparisons
        nxt = Ideal.make([g.transport(ztab) for g in nxt.generators],
                         grevlex(len(ztab)), ztab) if nxt.generators else \
            Ideal(tuple(), grevlex(len(ztab)), ztab)
        ideals.append(nxt)
        dims.append(dimension(nxt))
        if dims[-1] == n or nxt == ideals[-2]:
            break
    return SegreSetChain(tuple(GaussianRational.from_value(x) for x in p),
                         tuple(ideals), tuple(dims))


def minimality(M: CRManifold, p, j_max: Optional[int] = None) -> Tuple[bool, int]:
    """(True, j0) when the Segre sets reach full dimension at step j0;
    (False, j) when the chain stabilizes below dimension n."""
    j_max = j_max or M.n + 2
    chain = segre_sets(M, p, j_max)
    n = M.n
    for j, d in enumerate(chain.dims, start=1):
        if d == n:
            return True, j
    for j in range(1, len(chain.ideals)):
        if chain.ideals[j] == chain.ideals[j - 1]:
            return False, j
    raise InconclusiveError(
        f"Segre set chain did not stabilize within j_max={j_max} steps")
