"""Minimization of the subset complex by consecutive cancellations.

An entry joining symbols of equal multidegree with a nonzero scalar is
invertible; cancelling it removes both symbols and applies the Schur
update a'_{t,s} = a_{t,s} - a_{t,S} * a_{T,s} / a_{T,S} to the remaining
entries of that matrix, while the neighbouring matrices only lose a row
resp. a column. Iterating to exhaustion leaves the Betti numbers as the
surviving ranks. A strand-homology oracle recomputes every multigraded
Betti number independently of the cancellation path.

All arithmetic is exact: rationals by default, or F_p on request.
Scalars are stored bare; the monomial part of an entry is always the
quotient of the two symbols' multidegrees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import _kernels
from .errors import InternalInvariantError
from .monomials import Monomial, MonomialIdeal
from .taylor import TAYLOR_GUARD, TaylorComplex, build_taylor


class RationalField:
    """Exact rational scalars via fractions.Fraction."""

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def neg(x):
        return -x

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def div(x, y):
        return x / y

    @staticmethod
    def is_zero(x):
        return x == 0

    def rank(self, rows):
        return _kernels.rank_int(rows)


class PrimeField:
    """F_p scalars as plain ints in [0, p)."""

    def __init__(self, p: int = 32003):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def neg(self, x):
        return (-x) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def div(self, x, y):
        return (x * pow(y, self.p - 2, self.p)) % self.p

    def is_zero(self, x):
        return x % self.p == 0

    def rank(self, rows):
        return _kernels.rank_modp(rows, self.p)


RATIONAL = RationalField()


@dataclass
class BettiTable:
    """Total, graded and multigraded Betti numbers of a quotient."""

    total: tuple[int, ...]
    graded: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, Monomial], int]
    pd: int
    field_name: str = dc_field(compare=False, default="rational")

    @property
    def sum(self) -> int:
        return sum(self.total)

    def beta(self, i: int) -> int:
        return self.total[i] if 0 <= i < len(self.total) else 0


def _table_from_multigraded(
    multigraded: dict[tuple[int, Monomial], int], field_name: str
) -> BettiTable:
    pd = max(i for i, _ in multigraded)
    total = [0] * (pd + 1)
    graded: dict[tuple[int, int], int] = {}
    for (i, m), c in multigraded.items():
        total[i] += c
        key = (i, m.degree())
        graded[key] = graded.get(key, 0) + c
    return BettiTable(tuple(total), graded, dict(multigraded), pd, field_name)


class FreeComplex:
    """Mutable labeled complex over a field; starts as the full subset complex."""

    def __init__(self, ideal: MonomialIdeal, field, taylor: TaylorComplex):
        self.ideal = ideal
        self.field = field
        self.q = ideal.q
        self.mdeg_exps = taylor.mdeg_exps
        self.strata = [list(st) for st in taylor.strata]
        one, neg_one = field.one, field.neg(field.one)
        self.mats: list[dict[int, dict[int, object]]] = [dict()]
        for s in range(1, self.q + 1):
            cols = {}
            for sigma, col in taylor.diff[s].items():
                cols[sigma] = {
                    tau: (one if sign > 0 else neg_one) for tau, sign in col.items()
                }
            self.mats.append(cols)

    def copy(self) -> "FreeComplex":
        dup = object.__new__(FreeComplex)
        dup.ideal = self.ideal
        dup.field = self.field
        dup.q = self.q
        dup.mdeg_exps = self.mdeg_exps
        dup.strata = [list(st) for st in self.strata]
        dup.mats = [
            {sigma: dict(col) for sigma, col in mat.items()} for mat in self.mats
        ]
        return dup

    def mdeg(self, mask: int) -> Monomial:
        return Monomial(self.ideal.table, self.mdeg_exps[mask])

    def entry(self, s: int, tau: int, sigma: int):
        return self.mats[s].get(sigma, {}).get(tau)

    def is_invertible(self, s: int, tau: int, sigma: int) -> bool:
        val = self.entry(s, tau, sigma)
        return (
            val is not None
            and not self.field.is_zero(val)
            and self.mdeg_exps[tau] == self.mdeg_exps[sigma]
        )

    def find_invertible(self, start: int = 1):
        """First invertible entry in scan order: degree, then column, then row."""
        for s in range(max(start, 1), self.q + 1):
            mat = self.mats[s]
            for sigma in self.strata[s]:
                col = mat.get(sigma)
                if not col:
                    continue
                up = self.mdeg_exps[sigma]
                for tau in sorted(col):
                    if self.mdeg_exps[tau] == up:
                        return s, tau, sigma
        return None

    def all_invertible(self):
        out = []
        for s in range(1, self.q + 1):
            mat = self.mats[s]
            for sigma in self.strata[s]:
                col = mat.get(sigma)
                if not col:
                    continue
                up = self.mdeg_exps[sigma]
                out.extend((s, tau, sigma) for tau in sorted(col)
                           if self.mdeg_exps[tau] == up)
        return out

    def cancel(self, s: int, tau: int, sigma: int) -> "FreeComplex":
        """Cancel the invertible entry (tau, sigma) of matrix s, in place."""
        if not self.is_invertible(s, tau, sigma):
            raise ValueError(
                f"entry at degree {s}, row {tau:#x}, column {sigma:#x} is not invertible"
            )
        F = self.field
        mat = self.mats[s]
        col_rest = self.mats[s].pop(sigma)
        a = col_rest.pop(tau)
        row_rest = {}
        for sig2, col2 in mat.items():
            if tau in col2:
                row_rest[sig2] = col2.pop(tau)
        for sig2, b in row_rest.items():
            col2 = mat[sig2]
            factor = F.div(b, a)
            for tau2, c in col_rest.items():
                delta = F.mul(c, factor)
                cur = col2.get(tau2)
                new = F.neg(delta) if cur is None else F.sub(cur, delta)
                if F.is_zero(new):
                    col2.pop(tau2, None)
                else:
                    col2[tau2] = new
        self.strata[s].remove(sigma)
        self.strata[s - 1].remove(tau)
        if s + 1 <= self.q:
            for col2 in self.mats[s + 1].values():
                col2.pop(sigma, None)
        if s - 1 >= 1:
            self.mats[s - 1].pop(tau, None)
        return self

    def check_multihomogeneous(self) -> None:
        for s in range(1, self.q + 1):
            for sigma, col in self.mats[s].items():
                up = self.mdeg_exps[sigma]
                for tau, val in col.items():
                    if self.field.is_zero(val):
                        raise InternalInvariantError("stored zero entry")
                    if any(a > b for a, b in zip(self.mdeg_exps[tau], up)):
                        raise InternalInvariantError(
                            "entry between incomparable multidegrees"
                        )

    def check_d_squared(self) -> None:
        F = self.field
        for s in range(2, self.q + 1):
            lower = self.mats[s - 1]
            for sigma, col in self.mats[s].items():
                acc: dict[int, object] = {}
                for tau, val in col.items():
                    for rho, val2 in lower.get(tau, {}).items():
                        prod = F.mul(val, val2)
                        cur = acc.get(rho)
                        acc[rho] = prod if cur is None else F.add(cur, prod)
                for rho, total in acc.items():
                    if not F.is_zero(total):
                        raise InternalInvariantError(
                            f"d∘d != 0 between degrees {s} and {s - 2}"
                        )

    def validate(self) -> None:
        self.check_multihomogeneous()
        self.check_d_squared()

    def betti_table(self) -> BettiTable:
        multigraded: dict[tuple[int, Monomial], int] = {}
        for h, masks in enumerate(self.strata):
            for mask in masks:
                key = (h, self.mdeg(mask))
                multigraded[key] = multigraded.get(key, 0) + 1
        return _table_from_multigraded(multigraded, self.field.name)

    def surviving_symbols(self):
        from .taylor import TaylorSymbol

        return [
            [TaylorSymbol(mask, h, self.mdeg(mask)) for mask in masks]
            for h, masks in enumerate(self.strata)
        ]


def complex_from_taylor(
    ideal: MonomialIdeal, field=RATIONAL, max_q: int = TAYLOR_GUARD
) -> FreeComplex:
    return FreeComplex(ideal, field, build_taylor(ideal, max_q))


def find_invertible_entry(cx: FreeComplex):
    return cx.find_invertible()


def cancel(cx: FreeComplex, s: int, tau: int, sigma: int) -> FreeComplex:
    return cx.cancel(s, tau, sigma)


def minimize(
    ideal: MonomialIdeal,
    field=RATIONAL,
    max_q: int = TAYLOR_GUARD,
    pivot_rng: random.Random | None = None,
    validate: bool | None = None,
) -> tuple[FreeComplex, BettiTable]:
    """Cancel invertible entries to exhaustion; survivors give the Betti table.

    The canonical pivot order is the fixed scan order; passing a seeded
    `pivot_rng` picks uniformly among the currently invertible entries
    instead (the resulting table must not change, and tests check that).
    `validate` defaults to full checks for small complexes.
    """
    cx = complex_from_taylor(ideal, field, max_q)
    if validate is None:
        validate = ideal.q <= 8
    cursor = 1
    while True:
        if pivot_rng is None:
            hit = cx.find_invertible(cursor)
        else:
            pool = cx.all_invertible()
            hit = pool[pivot_rng.randrange(len(pool))] if pool else None
        if hit is None:
            break
        s, tau, sigma = hit
        cx.cancel(s, tau, sigma)
        cursor = s  # degrees below s were already clean and cannot regress
        if validate:
            cx.validate()
    if validate:
        if cx.find_invertible() is not None:
            raise InternalInvariantError("minimization left an invertible entry")
    return cx, cx.betti_table()


def betti_oracle(
    ideal: MonomialIdeal, field=RATIONAL, max_q: int = TAYLOR_GUARD
) -> BettiTable:
    """Multigraded Betti numbers from strand homology, no cancellations.

    Reducing the subset complex modulo the variables kills every entry
    whose endpoints have different multidegrees; what is left splits
    into one scalar strand per multidegree, whose homology ranks are
    computed by exact elimination.
    """
    cx = build_taylor(ideal, max_q)
    multigraded: dict[tuple[int, Monomial], int] = {}
    for exps, group in cx.mdeg_groups.items():
        levels: dict[int, list[int]] = {}
        for mask in group:
            levels.setdefault(bin(mask).count("1"), []).append(mask)
        ranks: dict[int, int] = {}
        for h, columns in levels.items():
            if h == 0 or h - 1 not in levels:
                continue
            row_index = {m: i for i, m in enumerate(levels[h - 1])}
            dense = [[0] * len(columns) for _ in row_index]
            for ci, sigma in enumerate(columns):
                for tau, sign in cx.diff[h][sigma].items():
                    ri = row_index.get(tau)
                    if ri is not None:
                        dense[ri][ci] = sign
            ranks[h] = field.rank(dense)
        for h, masks in levels.items():
            b = len(masks) - ranks.get(h, 0) - ranks.get(h + 1, 0)
            if b < 0:
                raise InternalInvariantError("negative strand homology rank")
            if b:
                multigraded[(h, Monomial(ideal.table, exps))] = b
    return _table_from_multigraded(multigraded, field.name)


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """Pairwise disjoint generator supports."""
    masks = ideal.support_masks
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                return False
    return True


def is_cohen_macaulay(
    ideal: MonomialIdeal, field=RATIONAL, max_q: int = TAYLOR_GUARD
) -> bool:
    """codim equals projective dimension."""
    from .nets import codim

    return codim(ideal) == minimize(ideal, field, max_q)[1].pd
