"""Exponent-vector monomials, minimal generating sets, and polarization.

Monomials are dense exponent vectors over an ordered variable table.
Ideals keep their minimal generating set in canonical order (descending
lexicographic on exponent vectors) so every downstream index, symbol and
report is reproducible.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    IdealSyntaxError,
    InvalidIdealError,
    TableMismatchError,
    UnknownVariableError,
)

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableTable:
    """Ordered register of ring variables.

    `origins` carries (base name, copy index) pairs for tables produced
    by polarization; plain tables leave it as None.
    """

    names: tuple[str, ...]
    origins: tuple[tuple[str, int], ...] | None = None

    def __post_init__(self):
        if not self.names:
            raise InvalidIdealError("a variable table needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise InvalidIdealError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise InvalidIdealError(f"invalid variable name {name!r}")
        if self.origins is not None and len(self.origins) != len(self.names):
            raise InvalidIdealError("origins must align with names")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(
                f"unknown variable {name!r} (table: {', '.join(self.names)})"
            ) from None

    def base_of(self, i: int) -> str:
        """Base variable identity of index i (collapses polarization copies)."""
        if self.origins is None:
            return self.names[i]
        return self.origins[i][0]


def table(*names: str) -> VariableTable:
    return VariableTable(tuple(names))


@dataclass(frozen=True)
class Monomial:
    table: VariableTable
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.table.n:
            raise InvalidIdealError(
                f"exponent vector of length {len(self.exponents)} for a "
                f"{self.table.n}-variable table"
            )
        if any(e < 0 for e in self.exponents):
            raise InvalidIdealError(f"negative exponent in {self.exponents}")

    def _check_table(self, other: "Monomial") -> None:
        if self.table != other.table:
            raise TableMismatchError(
                f"monomials live in different rings: "
                f"{self.table.names} vs {other.table.names}"
            )

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> tuple[int, ...]:
        """Indices of the variables that occur with positive exponent."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exponents):
            if e > 0:
                mask |= 1 << i
        return mask

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_table(other)
        return Monomial(
            self.table,
            tuple(a if a >= b else b for a, b in zip(self.exponents, other.exponents)),
        )

    def divides(self, other: "Monomial") -> bool:
        self._check_table(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def strongly_divides(self, other: "Monomial") -> bool:
        """True when every variable present here has strictly larger exponent there.

        Vacuously true for the unit monomial.
        """
        self._check_table(other)
        return all(a == 0 or a < b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, requiring exact divisibility."""
        self._check_table(other)
        if not other.divides(self):
            raise InvalidIdealError(f"{other} does not divide {self}")
        return Monomial(
            self.table, tuple(a - b for a, b in zip(self.exponents, other.exponents))
        )

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.table.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def monomial(tbl: VariableTable, exponents: Sequence[int]) -> Monomial:
    return Monomial(tbl, tuple(exponents))


def lcm_of(monomials: Iterable[Monomial]) -> Monomial:
    it = iter(monomials)
    try:
        acc = next(it)
    except StopIteration:
        raise InvalidIdealError("lcm of an empty collection") from None
    for m in it:
        acc = acc.lcm(m)
    return acc


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held as its unique minimal generating set.

    Generators are validated (no unit, no mutual divisibility, no
    duplicates) and stored in canonical order.
    """

    table: VariableTable
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.generators:
            raise InvalidIdealError("an ideal needs at least one generator")
        seen = set()
        for g in self.generators:
            if g.table != self.table:
                raise TableMismatchError("generator from a different ring")
            if g.is_unit:
                raise InvalidIdealError("the unit monomial cannot be a generator")
            if g.exponents in seen:
                raise InvalidIdealError(f"duplicate generator {g}")
            seen.add(g.exponents)
        for g in self.generators:
            for h in self.generators:
                if g is not h and g.divides(h):
                    raise InvalidIdealError(
                        f"non-minimal generating set: {g} divides {h}"
                    )
        expected = tuple(
            sorted(self.generators, key=lambda m: m.exponents, reverse=True)
        )
        if self.generators != expected:
            object.__setattr__(self, "generators", expected)

    @property
    def q(self) -> int:
        return len(self.generators)

    @property
    def n(self) -> int:
        return self.table.n

    @cached_property
    def support_masks(self) -> tuple[int, ...]:
        return tuple(g.support_mask() for g in self.generators)

    @cached_property
    def exponent_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exponents for g in self.generators)

    def lcm(self) -> Monomial:
        return lcm_of(self.generators)

    def appearing_variables(self) -> tuple[int, ...]:
        used = 0
        for m in self.support_masks:
            used |= m
        return tuple(i for i in range(self.n) if used >> i & 1)

    def render(self) -> str:
        return ", ".join(str(g) for g in self.generators)

    def __str__(self) -> str:
        return f"({self.render()})"


def minimalize(monomials: Sequence[Monomial]) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by `monomials`.

    Drops every monomial strictly divisible by another and deduplicates;
    the survivors are sorted canonically. Raises InvalidIdealError when
    the input is empty or generates the unit ideal.
    """
    if not monomials:
        raise InvalidIdealError("cannot build an ideal from no monomials")
    tbl = monomials[0].table
    distinct = []
    seen = set()
    for m in monomials:
        if m.table != tbl:
            raise TableMismatchError("monomials from different rings")
        if m.exponents not in seen:
            seen.add(m.exponents)
            distinct.append(m)
    kept = [
        m
        for m in distinct
        if not any(other is not m and other.divides(m) for other in distinct)
    ]
    if any(m.is_unit for m in kept):
        raise InvalidIdealError("input generates the unit ideal")
    return MonomialIdeal(tbl, tuple(kept))


def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree polarization, expanding x^e into e consecutive copies.

    Copy j of variable `x` is named `x_j`; the output table contains
    exactly the copies that occur in some polarized generator.
    """
    copies = [0] * ideal.n
    for g in ideal.generators:
        for i, e in enumerate(g.exponents):
            if e > copies[i]:
                copies[i] = e
    names = []
    origins = []
    slot = {}
    for i, c in enumerate(copies):
        for j in range(1, c + 1):
            slot[(i, j)] = len(names)
            names.append(f"{ideal.table.names[i]}_{j}")
            origins.append((ideal.table.names[i], j))
    pol_table = VariableTable(tuple(names), tuple(origins))
    gens = []
    for g in ideal.generators:
        exps = [0] * pol_table.n
        for i, e in enumerate(g.exponents):
            for j in range(1, e + 1):
                exps[slot[(i, j)]] = 1
        gens.append(Monomial(pol_table, tuple(exps)))
    # polarization preserves divisibility both ways, so minimality carries over
    return MonomialIdeal(pol_table, tuple(gens))


_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*|\^|\*|,|[0-9]+|.")


def _tokens(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        out.append((m.group(0), pos))
        pos = m.end()
    return out


def parse_ideal(text: str, var_names: Sequence[str] | None = None) -> MonomialIdeal:
    """Parse generator text like ``a^2*e, b^3*f`` into a MonomialIdeal.

    With `var_names` given, the table is exactly that list (unused
    variables still count towards n); otherwise variables are collected
    in order of first appearance. The generators are minimalized, with a
    warning if that drops anything.
    """
    toks = _tokens(text)
    if not toks:
        raise IdealSyntaxError("empty ideal text", 0)
    gens_raw = _parse_exponents(toks)

    if var_names is not None:
        tbl = VariableTable(tuple(var_names))
        for gen in gens_raw:
            for name, _, pos in gen:
                if name not in tbl.names:
                    raise UnknownVariableError(
                        f"unknown variable {name!r} at position {pos}"
                    )
    else:
        order: list[str] = []
        for gen in gens_raw:
            for name, _, _ in gen:
                if name not in order:
                    order.append(name)
        tbl = VariableTable(tuple(order))

    monomials = []
    for gen in gens_raw:
        exps = [0] * tbl.n
        for name, k, _ in gen:
            exps[tbl.index(name)] += k
        monomials.append(Monomial(tbl, tuple(exps)))

    ideal = minimalize(monomials)
    if ideal.q < len(monomials):
        warnings.warn(
            f"generating set was not minimal; reduced to {ideal.render()}",
            stacklevel=2,
        )
    return ideal


def _parse_exponents(toks) -> list[list[tuple[str, int, int]]]:
    gens: list[list[tuple[str, int, int]]] = [[]]
    i = 0
    state = "factor"  # factor | after_var | after_exp
    while i < len(toks):
        tok, pos = toks[i]
        if state == "factor":
            if not _NAME_RE.match(tok):
                raise IdealSyntaxError(f"expected a variable, got {tok!r}", pos)
            gens[-1].append((tok, 1, pos))
            state = "after_var"
        elif state in ("after_var", "after_exp"):
            if tok == "^" and state == "after_var":
                if i + 1 >= len(toks) or not toks[i + 1][0].isdigit():
                    raise IdealSyntaxError("'^' must be followed by an integer", pos)
                k = int(toks[i + 1][0])
                if k < 1:
                    raise IdealSyntaxError("exponent must be >= 1", toks[i + 1][1])
                name, _, vpos = gens[-1][-1]
                gens[-1][-1] = (name, k, vpos)
                i += 1
                state = "after_exp"
            elif tok == "*":
                state = "factor"
            elif tok == ",":
                gens.append([])
                state = "factor"
            else:
                raise IdealSyntaxError(f"unexpected token {tok!r}", pos)
        i += 1
    if state == "factor":
        last_pos = toks[-1][1] if toks else 0
        raise IdealSyntaxError("dangling separator", last_pos)
    return gens
