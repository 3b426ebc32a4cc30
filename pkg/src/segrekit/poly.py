"""Sparse multivariate polynomials over Q(i) with conjugate-variable bookkeeping.

Variables live in a VarTable.  A variable is either a z-variable (optionally
paired with a conjugate partner, printed `~name`), a conjugate variable, or a
parameter.  Conjugation of a polynomial conjugates every coefficient and swaps
each z-exponent with the exponent of its paired conjugate variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .gaussian import QI, QI_ONE, QI_ZERO, GaussianRational, format_coeff

Z_VAR = "z"
CONJ_VAR = "conj"
PARAM_VAR = "param"


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class VarTable:
    """Ordered variable set with kinds and conjugate pairing."""

    names: tuple
    kinds: tuple
    pairs: tuple  # index of conjugate partner, or None

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise PolyError("variable names must be unique")
        for i, j in enumerate(self.pairs):
            if j is not None and self.pairs[j] != i:
                raise PolyError("conjugate pairing must be an involution")

    @staticmethod
    def make(zvars: Sequence[str], params: Sequence[str] = (), conjugates: bool = True) -> "VarTable":
        """Table with z-variables (plus `~`-partners when requested) and parameters."""
        names = list(zvars)
        kinds = [Z_VAR] * len(zvars)
        pairs: list = [None] * len(zvars)
        if conjugates:
            for i, v in enumerate(zvars):
                names.append("~" + v)
                kinds.append(CONJ_VAR)
                pairs[i] = len(zvars) + i
                pairs.append(i)
        for p in params:
            names.append(p)
            kinds.append(PARAM_VAR)
            pairs.append(None)
        return VarTable(tuple(names), tuple(kinds), tuple(pairs))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolyError(f"unknown variable {name!r}") from None

    def indices(self, kind: str) -> tuple:
        return tuple(i for i, k in enumerate(self.kinds) if k == kind)

    def zvars(self) -> tuple:
        return tuple(self.names[i] for i in self.indices(Z_VAR))

    def extend_params(self, extra: Sequence[str]) -> "VarTable":
        return VarTable(
            self.names + tuple(extra),
            self.kinds + (PARAM_VAR,) * len(extra),
            self.pairs + (None,) * len(extra),
        )


class Poly:
    """Immutable sparse polynomial: map exponent tuple -> GaussianRational."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Optional[Mapping] = None):
        self.table = table
        clean = {}
        if terms:
            for m, c in terms.items():
                c = GaussianRational.from_value(c)
                if not c.is_zero():
                    clean[tuple(m)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(table: VarTable) -> "Poly":
        return Poly(table)

    @staticmethod
    def const(table: VarTable, c) -> "Poly":
        return Poly(table, {(0,) * len(table): GaussianRational.from_value(c)})

    @staticmethod
    def var(table: VarTable, name: str) -> "Poly":
        i = table.index(name)
        m = [0] * len(table)
        m[i] = 1
        return Poly(table, {tuple(m): QI_ONE})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return QI_ZERO
        if not self.is_constant():
            raise PolyError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, indices: Iterable[int]) -> int:
        idx = tuple(indices)
        return max((sum(m[i] for i in idx) for m in self.terms), default=0)

    def variables(self) -> set:
        """Indices of variables occurring with nonzero exponent."""
        out = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return out

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.table != other.table:
            raise PolyError("polynomials over different variable tables")

    def __add__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = Poly.const(self.table, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, QI_ZERO) + c
            if s.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = s
        return Poly(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, GaussianRational)):
            other = Poly.const(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, GaussianRational)):
            c = GaussianRational.from_value(other)
            return Poly(self.table, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, QI_ZERO) + c1 * c2
                if s.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Poly(self.table, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative polynomial power")
        out = Poly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale_monomial(self, mono: tuple, c: GaussianRational) -> "Poly":
        """self * c * x^mono (fast path used by the division algorithm)."""
        return Poly(
            self.table,
            {tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self.terms.items()},
        )

    def monic(self, order) -> "Poly":
        if self.is_zero():
            return self
        m = max(self.terms, key=order.key)
        return self * (QI_ONE / self.terms[m])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # -- conjugation -----------------------------------------------------------

    def conjugate(self) -> "Poly":
        """Conjugate coefficients and swap paired z/conjugate exponents."""
        pairs = self.table.pairs
        terms = {}
        for m, c in self.terms.items():
            swapped = list(m)
            for i, e in enumerate(m):
                if e and self.table.kinds[i] in (Z_VAR, CONJ_VAR) and pairs[i] is None:
                    raise PolyError(
                        f"variable {self.table.names[i]!r} has no conjugate partner"
                    )
            for i, j in enumerate(pairs):
                if j is not None:
                    swapped[i] = m[j]
            key = tuple(swapped)
            terms[key] = terms.get(key, QI_ZERO) + c.conjugate()
        return Poly(self.table, terms)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- substitution and evaluation ------------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly"]) -> "Poly":
        """Exact simultaneous substitution; unbound variables stay themselves."""
        idx_bind = {}
        for name, val in bindings.items():
            i = self.table.index(name)
            if isinstance(val, (int, GaussianRational)):
                val = Poly.const(self.table, val)
            if val.table != self.table:
                raise PolyError("binding polynomial over incompatible table")
            idx_bind[i] = val
        out = Poly.zero(self.table)
        for m, c in self.terms.items():
            residual = list(m)
            factor = Poly.const(self.table, c)
            for i, e in enumerate(m):
                if e and i in idx_bind:
                    residual[i] = 0
                    factor = factor * idx_bind[i] ** e
            out = out + factor.scale_monomial(tuple(residual), QI_ONE)
        return out

    def eval(self, point: Mapping[str, GaussianRational]) -> GaussianRational:
        """Exact value; every occurring variable must be bound."""
        values = [None] * len(self.table)
        for name, v in point.items():
            values[self.table.index(name)] = GaussianRational.from_value(v)
        total = QI_ZERO
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    if values[i] is None:
                        raise PolyError(f"unbound variable {self.table.names[i]!r}")
                    v = v * values[i] ** e
            total = total + v
        return total

    def diff(self, name: str) -> "Poly":
        i = self.table.index(name)
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                new = list(m)
                new[i] -= 1
                key = tuple(new)
                terms[key] = terms.get(key, QI_ZERO) + c * m[i]
        return Poly(self.table, terms)

    # -- table transport --------------------------------------------------------

    def transport(self, table: VarTable, name_map: Optional[Mapping[str, str]] = None) -> "Poly":
        """Rewrite over another table; variables renamed through name_map."""
        name_map = name_map or {}
        idx = {}
        for i in self.variables():
            src = self.table.names[i]
            idx[i] = table.index(name_map.get(src, src))
        terms = {}
        for m, c in self.terms.items():
            new = [0] * len(table)
            for i, e in enumerate(m):
                if e:
                    new[idx[i]] += e
            key = tuple(new)
            terms[key] = terms.get(key, QI_ZERO) + c
        return Poly(table, terms)

    # -- printing ----------------------------------------------------------------

    def to_str(self, order=None) -> str:
        from .orders import grevlex

        if self.is_zero():
            return "0"
        order = order or grevlex(len(self.table))
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                self.table.names[i] + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m)
                if e
            )
            if not mono:
                piece = format_coeff(c)
            elif c.is_one():
                piece = mono
            elif c == QI(-1):
                piece = "-" + mono
            else:
                cs = format_coeff(c)
                if ("+" in cs[1:]) or ("-" in cs[1:]):
                    cs = "(" + cs + ")"
                piece = cs + "*" + mono
            if parts and not piece.startswith("-"):
                parts.append("+" + piece)
            else:
                parts.append(piece)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()})"
