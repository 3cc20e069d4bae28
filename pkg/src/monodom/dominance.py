"""Dominant monomials, dominant sets, and the dominance route to odom.

A monomial in a set is dominant when some variable occurs in it with a
strictly larger exponent than in every other member; a set is dominant
when all of its members are. The order of dominance (odom) is the
largest size of a dominant subset of the generators that additionally
covers, via the top powers of its dominant variables, every generator
dividing its lcm.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import _kernels
from .errors import GuardExceeded
from .monomials import Monomial, MonomialIdeal, lcm_of

DOMINANCE_GUARD = 20  # 2^q subset enumeration; fail loudly past this


@dataclass(frozen=True)
class DominanceWitness:
    """A dominant subset together with its variable assignment.

    members[k] is dominant in variables[k]; exponents[k] is the exponent
    of that variable in the member, which equals its exponent in the lcm
    of the subset. The assignment is automatically injective: a variable
    can be dominant for at most one member.
    """

    members: tuple[int, ...]
    variables: tuple[int, ...]
    exponents: tuple[int, ...]
    lcm: Monomial

    def member_monomials(self, ideal: MonomialIdeal) -> tuple[Monomial, ...]:
        return tuple(ideal.generators[i] for i in self.members)

    def variable_names(self, ideal: MonomialIdeal) -> tuple[str, ...]:
        return tuple(ideal.table.names[v] for v in self.variables)


def dominant_variables(
    ideal: MonomialIdeal, member: int, subset: Iterable[int]
) -> tuple[int, ...]:
    """Variables in which generator `member` is dominant within `subset`."""
    members = sorted(set(subset))
    if member not in members:
        raise ValueError(f"generator {member} is not in the reference set {members}")
    rows = ideal.exponent_rows
    row = rows[member]
    out = []
    for v in range(ideal.n):
        e = row[v]
        if e > 0 and all(rows[o][v] < e for o in members if o != member):
            out.append(v)
    return tuple(out)


def _masks_for(ideal: MonomialIdeal, members: Sequence[int]):
    return _kernels.dominance_masks(ideal.exponent_rows, tuple(members))


def is_dominant_set(
    ideal: MonomialIdeal, subset: Iterable[int]
) -> tuple[bool, DominanceWitness | None]:
    """Whether every member of `subset` is dominant within it.

    The witness assigns each member its least dominant variable.
    """
    members = tuple(sorted(set(subset)))
    if not members:
        raise ValueError("a dominant set must be nonempty")
    masks = _masks_for(ideal, members)
    if masks is None:
        return False, None
    variables = tuple((m & -m).bit_length() - 1 for m in masks)
    rows = ideal.exponent_rows
    exponents = tuple(rows[g][v] for g, v in zip(members, variables))
    lcm = lcm_of(ideal.generators[i] for i in members)
    return True, DominanceWitness(members, variables, exponents, lcm)


def _covering_assignment(
    ideal: MonomialIdeal, members: tuple[int, ...], masks: list[int]
) -> tuple[int, ...] | None:
    """Pick one dominant variable per member so the subset covers its lcm.

    A generator g dividing lcm(members) is covered when some chosen
    variable's full lcm-exponent power divides g. Members always cover
    themselves, so only outside divisors constrain the choice. Returns
    the lexicographically least choice vector, or None.
    """
    rows = ideal.exponent_rows
    lcm_exps = [0] * ideal.n
    for g in members:
        for v, e in enumerate(rows[g]):
            if e > lcm_exps[v]:
                lcm_exps[v] = e
    member_set = set(members)
    outsiders = [
        g
        for g in range(ideal.q)
        if g not in member_set
        and all(a <= b for a, b in zip(rows[g], lcm_exps))
    ]

    def covers(var: int) -> frozenset[int]:
        e = lcm_exps[var]
        return frozenset(g for g in outsiders if rows[g][var] >= e)

    choices = []
    for mask in masks:
        vars_here = []
        m = mask
        while m:
            low = m & -m
            vars_here.append(low.bit_length() - 1)
            m ^= low
        choices.append(vars_here)

    if not outsiders:
        return tuple(vs[0] for vs in choices)

    cover_of = {v: covers(v) for vs in choices for v in vs}
    # union of everything still choosable from position i onward
    suffix_union: list[frozenset[int]] = [frozenset()] * (len(choices) + 1)
    for i in range(len(choices) - 1, -1, -1):
        acc = suffix_union[i + 1]
        for v in choices[i]:
            acc = acc | cover_of[v]
        suffix_union[i] = acc

    need = frozenset(outsiders)
    picked: list[int] = []

    def walk(i: int, covered: frozenset[int]) -> bool:
        if i == len(choices):
            return covered >= need
        if not (covered | suffix_union[i]) >= need:
            return False
        for v in choices[i]:
            picked.append(v)
            if walk(i + 1, covered | cover_of[v]):
                return True
            picked.pop()
        return False

    if walk(0, frozenset()):
        return tuple(picked)
    return None


def _witness(
    ideal: MonomialIdeal, members: tuple[int, ...], variables: tuple[int, ...]
) -> DominanceWitness:
    rows = ideal.exponent_rows
    exponents = tuple(rows[g][v] for g, v in zip(members, variables))
    lcm = lcm_of(ideal.generators[i] for i in members)
    return DominanceWitness(members, variables, exponents, lcm)


def odom_by_dominance(
    ideal: MonomialIdeal, max_q: int = DOMINANCE_GUARD
) -> tuple[int, DominanceWitness]:
    """Order of dominance via direct subset enumeration.

    Scans candidate subsets by descending cardinality; a subset counts
    when it is dominant and admits a variable assignment whose top
    powers cover every generator dividing the subset's lcm. Ties are
    broken toward the lexicographically least generator-index subset.
    """
    if ideal.q > max_q:
        raise GuardExceeded(
            f"odom enumeration over 2^{ideal.q} subsets exceeds the q <= {max_q} guard"
        )
    cap = min(ideal.q, len(ideal.appearing_variables()))
    for size in range(cap, 0, -1):
        for members in combinations(range(ideal.q), size):
            masks = _masks_for(ideal, members)
            if masks is None:
                continue
            assignment = _covering_assignment(ideal, members, masks)
            if assignment is not None:
                return size, _witness(ideal, members, assignment)
    raise AssertionError("unreachable: every singleton generator qualifies")


def is_taylor_minimal(ideal: MonomialIdeal) -> bool:
    """Whether the full generator set is dominant (no cancellation possible)."""
    return is_dominant_set(ideal, range(ideal.q))[0]


def has_full_dominant_set(
    ideal: MonomialIdeal, max_q: int = DOMINANCE_GUARD
) -> tuple[bool, DominanceWitness | None]:
    """Search for a dominant subset of size n whose lcm no generator strongly divides."""
    if ideal.q > max_q:
        raise GuardExceeded(
            f"dominant-set search over 2^{ideal.q} subsets exceeds the q <= {max_q} guard"
        )
    n = ideal.n
    if ideal.q < n or len(ideal.appearing_variables()) < n:
        return False, None
    for members in combinations(range(ideal.q), n):
        masks = _masks_for(ideal, members)
        if masks is None:
            continue
        # n members with disjoint nonempty masks over n variables: all singletons
        variables = tuple((m & -m).bit_length() - 1 for m in masks)
        lcm = lcm_of(ideal.generators[i] for i in members)
        if any(g.strongly_divides(lcm) for g in ideal.generators):
            continue
        rows = ideal.exponent_rows
        exponents = tuple(rows[g][v] for g, v in zip(members, variables))
        return True, DominanceWitness(members, variables, exponents, lcm)
    return False, None
