"""Monomial orders: grevlex, lex, and elimination block orders.

An order exposes `key(exponents) -> sortable`, with key(a) > key(b) exactly
when monomial a is larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _lex_key(exps):
    return tuple(exps)


@dataclass(frozen=True)
class MonomialOrder:
    kind: str                      # "grevlex" | "lex" | "block"
    nvars: int
    block: Optional[tuple] = None  # eliminated variable indices, for "block"

    def key(self, exps):
        if self.kind == "grevlex":
            return _grevlex_key(exps)
        if self.kind == "lex":
            return _lex_key(exps)
        blk = set(self.block)
        outer = tuple(e for i, e in enumerate(exps) if i in blk)
        inner = tuple(e for i, e in enumerate(exps) if i not in blk)
        return (_grevlex_key(outer), _grevlex_key(inner))

    def describe(self) -> str:
        if self.kind == "block":
            return f"block(elim={sorted(self.block)})"
        return self.kind


def grevlex(nvars: int) -> MonomialOrder:
    return MonomialOrder("grevlex", nvars)


def lex(nvars: int) -> MonomialOrder:
    return MonomialOrder("lex", nvars)


def block_elim(nvars: int, elim_indices) -> MonomialOrder:
    return MonomialOrder("block", nvars, tuple(sorted(elim_indices)))
