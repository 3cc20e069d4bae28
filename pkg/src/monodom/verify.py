"""Executable theorem suite over a single ideal, plus seeded fuzzing.

Every structural statement the library relies on is rechecked per ideal:
the codim <= odom <= pd chain, the pd = n / pd = 1 equivalences, the
binomial and 2^odom Betti bounds, the Scarf and Taylor-minimality
characterizations, polarization invariance of odom, agreement of the two
odom routes, and engine-vs-oracle equality of Betti tables. A failed
check is reported by name, never swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iter_product
from math import comb
from typing import Iterator, Sequence

from .dominance import (
    DOMINANCE_GUARD,
    DominanceWitness,
    is_taylor_minimal,
    odom_by_dominance,
)
from .errors import FuzzFailure, GuardExceeded, TaylorTooLarge
from .monomials import Monomial, MonomialIdeal, VariableTable, minimalize, polarize
from .nets import NET_FAMILY_GUARD, MinimalNetFamily, Net, minimal_nets, odom_by_nets
from .resolution import (
    RATIONAL,
    BettiTable,
    betti_oracle,
    is_complete_intersection,
    minimize,
)
from .taylor import TAYLOR_GUARD, scarf_basis

# ---------------------------------------------------------------------------
# splitmix64: chosen because it is bit-exactly specifiable in a few lines


_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class SplitMix64:
    """The splitmix64 stream: state += gamma, output = mix(state)."""

    def __init__(self, state: int):
        self.state = state & _M64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _M64
        return _mix(self.state)

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


@dataclass(frozen=True)
class FuzzParams:
    n_max: int
    q_max: int
    exp_max: int
    trials: int
    seed: int = 0
    exhaustive: bool = False

    def __post_init__(self):
        if self.n_max < 1 or self.q_max < 1 or self.exp_max < 1:
            raise ValueError("n_max, q_max and exp_max must all be >= 1")


def random_ideal(params: FuzzParams, trial_index: int) -> MonomialIdeal:
    """Deterministic ideal for (seed, trial_index).

    The trial's stream starts at state seed + trial_index * gamma, i.e.
    trial t reads the master splitmix64 sequence shifted by t steps.
    Draws: n in [1, n_max], q' in [1, q_max], then q' exponent vectors
    uniform in [0, exp_max]^n; all-zero draws are retried a bounded
    number of times before one coordinate is forced positive. The result
    is the minimalization of those monomials.
    """
    rng = SplitMix64((params.seed + trial_index * _GAMMA) & _M64)
    n = 1 + rng.below(params.n_max)
    qq = 1 + rng.below(params.q_max)
    tbl = VariableTable(tuple(f"x{i}" for i in range(1, n + 1)))
    monomials = []
    for _ in range(qq):
        exps = None
        for _ in range(16):
            cand = tuple(rng.below(params.exp_max + 1) for _ in range(n))
            if any(cand):
                exps = cand
                break
        if exps is None:
            forced = [0] * n
            forced[rng.below(n)] = 1 + rng.below(params.exp_max)
            exps = tuple(forced)
        monomials.append(Monomial(tbl, exps))
    return minimalize(monomials)


def exhaustive_ideals(params: FuzzParams) -> Iterator[MonomialIdeal]:
    """Every minimal monomial ideal with n <= n_max, exponents <= exp_max,
    and at most q_max generators, enumerated deterministically per ambient n.
    """
    for n in range(1, params.n_max + 1):
        tbl = VariableTable(tuple(f"x{i}" for i in range(1, n + 1)))
        pool = sorted(
            (
                exps
                for exps in iter_product(range(params.exp_max + 1), repeat=n)
                if any(exps)
            ),
            reverse=True,
        )
        k = len(pool)
        comparable = [
            [
                all(a <= b for a, b in zip(pool[i], pool[j]))
                or all(a >= b for a, b in zip(pool[i], pool[j]))
                for j in range(k)
            ]
            for i in range(k)
        ]

        def walk(start: int, chosen: list[int]):
            for i in range(start, k):
                if any(comparable[i][j] for j in chosen):
                    continue
                chosen.append(i)
                yield MonomialIdeal(
                    tbl, tuple(Monomial(tbl, pool[j]) for j in chosen)
                )
                if len(chosen) < params.q_max:
                    yield from walk(i + 1, chosen)
                chosen.pop()

        yield from walk(0, [])


# ---------------------------------------------------------------------------
# per-ideal report


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # pass | fail | vacuous
    detail: str = ""


@dataclass
class InvariantReport:
    ideal: MonomialIdeal
    polarized: MonomialIdeal
    field_name: str
    codim: int
    odom_dominance: int
    odom_nets: int
    pd: int
    betti: BettiTable
    betti_by_oracle: BettiTable
    scarf_ranks: tuple[int, ...]
    taylor_minimal: bool
    scarf: bool
    complete_intersection: bool
    cohen_macaulay: bool
    nets_base: MinimalNetFamily
    nets_polarized: MinimalNetFamily
    dominance_witness: DominanceWitness
    net_witness: Net
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def q(self) -> int:
        return self.ideal.q

    @property
    def odom(self) -> int:
        return self.odom_dominance

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]


def _both(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", detail)


def _implication(name: str, antecedent: bool, consequent: bool, detail: str) -> CheckResult:
    if not antecedent:
        return CheckResult(name, "vacuous", detail)
    return CheckResult(name, "pass" if consequent else "fail", detail)


def check_report(
    ideal: MonomialIdeal,
    field=RATIONAL,
    taylor_max_q: int = TAYLOR_GUARD,
    dominance_max_q: int = DOMINANCE_GUARD,
    net_cap: int = NET_FAMILY_GUARD,
) -> InvariantReport:
    """Compute every invariant of the quotient and evaluate all checks."""
    if ideal.q > taylor_max_q:
        raise TaylorTooLarge(ideal.q, taylor_max_q)
    pol = polarize(ideal)
    odom_d, dom_witness = odom_by_dominance(ideal, dominance_max_q)
    odom_n, net_witness = odom_by_nets(ideal, net_cap)
    nets_base = minimal_nets(ideal, net_cap)
    nets_pol = minimal_nets(pol, net_cap)
    cod = nets_base.min_card
    _, betti_min = minimize(ideal, field, taylor_max_q)
    betti_orc = betti_oracle(ideal, field, taylor_max_q)
    pd = betti_min.pd
    ranks = scarf_basis(ideal, taylor_max_q).ranks
    scarf = ranks == betti_min.total
    tmin = is_taylor_minimal(ideal)
    ci = is_complete_intersection(ideal)
    cm = cod == pd
    odom_pol, _ = odom_by_dominance(pol, dominance_max_q)

    n, q = ideal.n, ideal.q
    odom = odom_d
    total = betti_min.total
    bsum = betti_min.sum
    pol_cards = nets_pol.cardinalities()
    same_card = min(pol_cards) == max(pol_cards)

    checks = [
        _both(
            "odom-routes-agree",
            odom_d == odom_n,
            f"dominance {odom_d} vs nets {odom_n}",
        ),
        _both(
            "codim-le-odom-le-pd",
            cod <= odom <= pd,
            f"codim {cod}, odom {odom}, pd {pd}",
        ),
        _both(
            "pd-n-iff-odom-n",
            (pd == n) == (odom == n),
            f"pd {pd}, odom {odom}, n {n}",
        ),
        _both(
            "pd-1-iff-odom-1",
            (pd == 1) == (odom == 1),
            f"pd {pd}, odom {odom}",
        ),
        _implication(
            "odom-n-minus-1-forces-pd",
            odom == n - 1,
            pd == n - 1,
            f"odom {odom}, pd {pd}, n {n}",
        ),
        _implication(
            "odom-q-minus-1-forces-pd",
            odom == q - 1,
            pd == q - 1,
            f"odom {odom}, pd {pd}, q {q}",
        ),
        _implication(
            "scarf-forces-pd-eq-odom",
            scarf,
            pd == odom,
            f"pd {pd}, odom {odom}",
        ),
        _both(
            "taylor-minimal-iff-odom-q",
            tmin == (odom == q),
            f"taylor_minimal {tmin}, odom {odom}, q {q}",
        ),
        _both(
            "betti-binomial-odom",
            all(betti_min.beta(r) >= comb(odom, r) for r in range(pd + 1)),
            f"betti {total} vs C({odom}, r)",
        ),
        _both(
            "betti-binomial-pd",
            all(betti_min.beta(r) >= comb(pd, r) for r in range(pd + 1)),
            f"betti {total} vs C({pd}, r)",
        ),
        _implication(
            "betti-sum-two-pow-odom",
            odom > cod,
            bsum >= 2**odom and 2**odom > 2**cod + 2 ** (cod - 1),
            f"sum {bsum}, odom {odom}, codim {cod}",
        ),
        _implication(
            "betti-sum-non-ci",
            not ci,
            bsum >= 2**cod + 2 ** (cod - 1),
            f"sum {bsum}, codim {cod}",
        ),
        _implication(
            "three-variables",
            n == 3,
            pd == odom and cm == same_card,
            f"pd {pd}, odom {odom}, CM {cm}, net cards {pol_cards}",
        ),
        _implication(
            "scarf-cm-iff-equal-net-cards",
            scarf,
            cm == same_card,
            f"CM {cm}, net cards {pol_cards}",
        ),
        _both(
            "odom-polarization-invariant",
            odom == odom_pol,
            f"odom {odom}, odom of polarization {odom_pol}",
        ),
        _both(
            "betti-engine-vs-oracle",
            betti_min == betti_orc,
            f"engine {total} vs oracle {betti_orc.total}",
        ),
    ]

    return InvariantReport(
        ideal=ideal,
        polarized=pol,
        field_name=field.name,
        codim=cod,
        odom_dominance=odom_d,
        odom_nets=odom_n,
        pd=pd,
        betti=betti_min,
        betti_by_oracle=betti_orc,
        scarf_ranks=ranks,
        taylor_minimal=tmin,
        scarf=scarf,
        complete_intersection=ci,
        cohen_macaulay=cm,
        nets_base=nets_base,
        nets_polarized=nets_pol,
        dominance_witness=dom_witness,
        net_witness=net_witness,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# fuzz driver


@dataclass
class FuzzSummary:
    params: FuzzParams
    ideal_count: int
    check_tally: dict[str, dict[str, int]]
    gap_histogram: dict[int, int]  # pd - odom occurrences

    def to_dict(self) -> dict:
        return {
            "params": {
                "n_max": self.params.n_max,
                "q_max": self.params.q_max,
                "exp_max": self.params.exp_max,
                "trials": self.params.trials,
                "seed": self.params.seed,
                "exhaustive": self.params.exhaustive,
            },
            "ideals": self.ideal_count,
            "checks": {
                name: dict(sorted(tally.items()))
                for name, tally in sorted(self.check_tally.items())
            },
            "gap_histogram": {str(k): v for k, v in sorted(self.gap_histogram.items())},
        }


def fuzz(params: FuzzParams, field=RATIONAL) -> FuzzSummary:
    """Run check_report on each generated ideal; abort on the first failure."""
    tally: dict[str, dict[str, int]] = {}
    gaps: dict[int, int] = {}
    count = 0

    if params.exhaustive:
        stream = ((f"exhaustive#{i}", ideal) for i, ideal in
                  enumerate(exhaustive_ideals(params)))
    else:
        stream = (
            (f"seed {params.seed}, trial {t}", random_ideal(params, t))
            for t in range(params.trials)
        )

    for origin, ideal in stream:
        report = check_report(ideal, field)
        for c in report.checks:
            tally.setdefault(c.name, {})[c.status] = (
                tally.setdefault(c.name, {}).get(c.status, 0) + 1
            )
        gap = report.pd - report.odom
        gaps[gap] = gaps.get(gap, 0) + 1
        count += 1
        if not report.ok:
            failed = ", ".join(c.name for c in report.failed_checks())
            raise FuzzFailure(
                f"theorem check(s) failed: {failed}",
                ideal.render(),
                origin,
            )
    return FuzzSummary(params, count, tally, gaps)


# ---------------------------------------------------------------------------
# basis-element existence machinery: a dominant subset of size k whose
# members carry the global top exponents of their assigned variables, and
# whose top powers divide every generator, forces a surviving basis element
# in homological degree k whose multidegree matches those exponents exactly
# and is bounded by lcm(G) elsewhere


@dataclass(frozen=True)
class LemmaInstance:
    """One scanned (dominant subset, variable assignment) pair.

    `satisfied` records whether both hypotheses hold: each member attains
    the global lcm exponent of its assigned variable, and every generator
    is divisible by some assigned top power. For satisfied instances
    `witness_mdeg` is a multidegree with a positive Betti number in
    homological degree len(members), matching the predicted pattern;
    None there is a refutation.
    """

    members: tuple[int, ...]
    variables: tuple[int, ...]
    satisfied: bool
    witness_mdeg: Monomial | None


def check_lemma_hypotheses(
    ideal: MonomialIdeal,
    field=RATIONAL,
    taylor_max_q: int = TAYLOR_GUARD,
    dominance_max_q: int = DOMINANCE_GUARD,
) -> list[LemmaInstance]:
    """Scan dominant subsets for the existence hypotheses and their witnesses.

    Hypotheses, for members d_1..d_k assigned distinct variables
    x_{i_1}..x_{i_k} with a = exponents of lcm(G):
      (i) d_j is dominant in x_{i_j} within the subset and carries the
          full exponent a_{i_j};
      (ii) every generator is divisible by some x_{i_j}^{a_{i_j}}.
    For every satisfied instance a multidegree m with beta_{k,m} >= 1,
    m matching a_{i_j} exactly on assigned variables and bounded by a
    elsewhere, is looked up in the oracle's multigraded table.
    """
    if ideal.q > dominance_max_q:
        raise GuardExceeded(
            f"lemma scan over 2^{ideal.q} subsets exceeds the q <= {dominance_max_q} guard"
        )
    from itertools import combinations

    from . import _kernels

    betti = betti_oracle(ideal, field, taylor_max_q)
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for (h, m), _ in betti.multigraded.items():
        by_degree.setdefault(h, []).append(m.exponents)

    rows = ideal.exponent_rows
    global_lcm = ideal.lcm().exponents
    out: list[LemmaInstance] = []
    for size in range(1, min(ideal.q, ideal.n) + 1):
        for members in combinations(range(ideal.q), size):
            masks = _kernels.dominance_masks(rows, members)
            if masks is None:
                continue
            # keep only dominant variables carrying the global lcm exponent
            choices = []
            for g, mask in zip(members, masks):
                opts = []
                m = mask
                while m:
                    low = m & -m
                    v = low.bit_length() - 1
                    if rows[g][v] == global_lcm[v]:
                        opts.append(v)
                    m ^= low
                choices.append(opts)
            if any(not opts for opts in choices):
                continue
            for assignment in iter_product(*choices):
                powers = {v: global_lcm[v] for v in assignment}
                satisfied = all(
                    any(rows[g][v] >= e for v, e in powers.items())
                    for g in range(ideal.q)
                )
                witness = None
                if satisfied:
                    for exps in by_degree.get(size, []):
                        if all(exps[v] == e for v, e in powers.items()) and all(
                            exps[v] <= global_lcm[v]
                            for v in range(ideal.n)
                            if v not in powers
                        ):
                            witness = Monomial(ideal.table, exps)
                            break
                out.append(
                    LemmaInstance(members, tuple(assignment), satisfied, witness)
                )
    return out


def pure_power_extension(
    ideal: MonomialIdeal, variables: Sequence[int]
) -> tuple[MonomialIdeal, dict[int, int]]:
    """Extend the generators by x_j^(a_j + 1) for every unassigned variable.

    `a` is the exponent vector of lcm(G). Returns the extended ideal (in
    the same ring) and the symbol map: old subset masks map to new ones
    by reindexing old members and appending every new pure power. The
    extension realizes a full-size dominant set whenever the input
    carried a lemma-satisfying dominant set on `variables`.
    """
    chosen = set(variables)
    global_lcm = ideal.lcm().exponents
    tbl = ideal.table
    extra = []
    for v in range(ideal.n):
        if v not in chosen:
            exps = [0] * ideal.n
            exps[v] = global_lcm[v] + 1
            extra.append(Monomial(tbl, tuple(exps)))
    extended = MonomialIdeal(tbl, ideal.generators + tuple(extra))
    old_to_new = {
        i: extended.generators.index(g) for i, g in enumerate(ideal.generators)
    }
    extra_mask = 0
    for m in extra:
        extra_mask |= 1 << extended.generators.index(m)

    mask_map: dict[int, int] = {}
    for mask in range(1 << ideal.q):
        new_mask = extra_mask
        rest = mask
        while rest:
            low = rest & -rest
            new_mask |= 1 << old_to_new[low.bit_length() - 1]
            rest ^= low
        mask_map[mask] = new_mask
    return extended, mask_map
