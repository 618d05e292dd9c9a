"""End-to-end verification for one prime and one starting label.

The certified statement: for every odd prime p and every nontrivial
character of V = C_p x C_p, the induced character of G = V : Q8 is
irreducible, has Frobenius-Schur indicator +1, and its square contains the
quaternionic degree-2 character.  A Report records the exact quantities
behind each of the three claims plus the structural health checks of the
table they were read from.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (assemble_character_table, check_first_orthogonality,
                         check_second_orthogonality, default_label,
                         fs_indicator, fs_indicator_direct, inner_product,
                         label_orbit, label_orbits, normalize_label,
                         restriction_to_core_inner, stabilizer_in_q,
                         tensor_square_decompose)
from .errors import InvariantError, UsageError
from .groups import (DEFAULT_PRIME_BOUND, build_group, conjugacy_classes,
                     conjugated_subgroup, count_square_roots_of_identity,
                     quaternion_subgroup, require_odd_prime, square_locus)
from .modp import Mat2, is_odd_prime

CLAIM_NAMES = ("induced_irreducible", "indicator_one", "square_contains_psi")


@dataclass
class Report:
    """Machine-readable verdict for one (prime, label) run."""

    prime: int
    label: tuple
    orbit_rep: tuple
    group_order: int
    class_count: int
    degree_multiset: tuple
    indicator_list: tuple
    row_names: tuple
    stabilizer_size: int
    induced_norm: Fraction
    indicator_induced: int
    indicator_induced_direct: int
    indicator_psi: int
    indicator_psi_direct: int
    psi_multiplicity: int
    decomposition: dict
    indicator_breakdown: dict
    claims: dict
    checks: dict
    square_locus_size: int
    timings: dict = field(default_factory=dict)
    alt_subgroup: dict | None = None

    @property
    def overall_pass(self):
        ok = all(self.claims.values()) and all(self.checks.values())
        if self.alt_subgroup is not None:
            ok = ok and self.alt_subgroup["pass"]
        return ok


def run_table_checks(table):
    """Structural checks at table level; independent of the chosen label."""
    ct = table.class_table
    group = ct.group
    p = ct.p
    values_list = [r.values for r in table.rows]
    checks = {}

    def _passed(name, fn):
        try:
            fn()
        except InvariantError:
            checks[name] = False
        else:
            checks[name] = True

    _passed("first_orthogonality",
            lambda: check_first_orthogonality(ct, values_list))
    _passed("second_orthogonality",
            lambda: check_second_orthogonality(ct, values_list))
    checks["degree_sum"] = sum(r.degree ** 2 for r in table.rows) == ct.order
    checks["class_partition"] = (
        sum(ct.sizes) == ct.order
        and all(ct.order % s == 0 for s in ct.sizes)
        and all(s * c == ct.order for s, c in zip(ct.sizes, ct.centralizer_orders))
    )

    sq_count = count_square_roots_of_identity(ct)
    checks["sum_rule"] = (
        sum(r.indicator * r.degree for r in table.rows) == sq_count
        and sq_count == 1 + p * p
    )

    # {g : g^2 in V} must be exactly V together with the z-coset of V
    z = group.quaternion.z.entries()
    expected = {e for e in group.elements if e[2:] in ((1, 0, 0, 1), z)}
    locus = square_locus(group)
    checks["square_locus"] = locus == expected and len(locus) == 2 * p * p
    ident = group.identity
    checks["core_involution_squares"] = all(
        group.mul(e, e) == ident for e in group.elements if e[2:] == z)

    checks["induced_vanish_off_core"] = all(
        r.values[k].is_zero()
        for r in table.rows if r.name.startswith("ind_")
        for k in range(ct.n_classes) if ct.rep_element(k)[2:] != (1, 0, 0, 1))

    return checks, len(locus)


def verify_label(table, label, table_checks=None, locus_size=None):
    """Check the three claims for one label against an already-built table."""
    ct = table.class_table
    p = ct.p
    label = normalize_label(label, p)
    if label == (0, 0):
        raise UsageError("label must be nontrivial")
    t0 = time.perf_counter()
    if table_checks is None:
        table_checks, locus_size = run_table_checks(table)

    q = ct.group.quaternion
    stab = stabilizer_in_q(q, label)
    orbit_rep = min(label_orbit(q, label))
    chi = table.induced_row_for_label(label)
    psi = table.rows[table.psi_index]

    norm = inner_product(ct, chi.values, chi.values)
    ind_chi = fs_indicator(ct, chi.values)
    ind_chi_direct = fs_indicator_direct(ct, chi.values)
    ind_psi = fs_indicator(ct, psi.values)
    ind_psi_direct = fs_indicator_direct(ct, psi.values)
    decomposition = tensor_square_decompose(table, chi)
    psi_mult = decomposition[psi.name]

    core_order = p * p
    restriction = restriction_to_core_inner(ct, chi.values)
    numerator = core_order * chi.degree + core_order * restriction
    breakdown = {
        "core_order": core_order,
        "degree": chi.degree,
        "restriction_inner": restriction,
        "numerator": numerator,
        "group_order": ct.order,
        "consistent": numerator == ct.order * ind_chi,
    }

    claims = {
        "induced_irreducible": len(stab) == 1 and norm == 1,
        "indicator_one": ind_chi == 1 and ind_chi_direct == 1,
        "square_contains_psi": psi_mult >= 1,
    }
    checks = dict(table_checks)
    checks["indicator_breakdown"] = breakdown["consistent"]
    checks["unique_quaternionic_row"] = (
        sorted(r.indicator for r in table.rows).count(-1) == 1
        and psi.indicator == -1)

    elapsed = time.perf_counter() - t0
    return Report(
        prime=p,
        label=label,
        orbit_rep=orbit_rep,
        group_order=ct.order,
        class_count=ct.n_classes,
        degree_multiset=tuple(sorted(r.degree for r in table.rows)),
        indicator_list=tuple(r.indicator for r in table.rows),
        row_names=tuple(r.name for r in table.rows),
        stabilizer_size=len(stab),
        induced_norm=norm,
        indicator_induced=ind_chi,
        indicator_induced_direct=ind_chi_direct,
        indicator_psi=ind_psi,
        indicator_psi_direct=ind_psi_direct,
        psi_multiplicity=psi_mult,
        decomposition=decomposition,
        indicator_breakdown=breakdown,
        claims=claims,
        checks=checks,
        square_locus_size=locus_size,
        timings={"verification_seconds": elapsed},
    )


def build_table_timed(p, quaternion=None, bound=DEFAULT_PRIME_BOUND):
    """Group, classes and table for one prime, with per-phase wall times."""
    require_odd_prime(p, bound)
    timings = {}
    t0 = time.perf_counter()
    group = build_group(p, quaternion, bound)
    t1 = time.perf_counter()
    ct = conjugacy_classes(group)
    t2 = time.perf_counter()
    table = assemble_character_table(ct)
    t3 = time.perf_counter()
    timings["group_seconds"] = t1 - t0
    timings["classes_seconds"] = t2 - t1
    timings["table_seconds"] = t3 - t2
    return table, timings


ALT_CONJUGATOR = (1, 1, 0, 1)  # unipotent, det 1; moves Q off itself for p > 3


def _alt_subgroup_summary(p, label, reference, bound):
    """Verify against a conjugate quaternion subgroup and compare verdicts.

    All quaternion subgroups of SL2(p) are conjugate, so every certified
    invariant must agree with the reference run; disagreement is an internal
    error, not a verification failure.
    """
    t = Mat2.make(*ALT_CONJUGATOR, p)
    alt_q = conjugated_subgroup(quaternion_subgroup(p, bound), t)
    table, _ = build_table_timed(p, alt_q, bound)
    rep = verify_label(table, label)
    summary = {
        "conjugator": list(ALT_CONJUGATOR),
        "pass": rep.overall_pass,
        "psi_multiplicity": rep.psi_multiplicity,
        "class_count_match": rep.class_count == reference.class_count,
        "degree_multiset_match": rep.degree_multiset == reference.degree_multiset,
        "indicator_multiset_match": (sorted(rep.indicator_list)
                                     == sorted(reference.indicator_list)),
    }
    mism = [k for k, v in summary.items() if k.endswith("_match") and not v]
    if mism:
        raise InvariantError(
            f"conjugate quaternion subgroup changed certified invariants: {mism}")
    return summary


def verify_prime(p, label=None, bound=DEFAULT_PRIME_BOUND, alt_subgroup=False):
    """Full pipeline for one prime: build, check, and certify the claims."""
    require_odd_prime(p, bound)
    if label is None:
        label = default_label(p)
    label = normalize_label(label, p)
    if label == (0, 0):
        raise UsageError("label must be nontrivial")
    total0 = time.perf_counter()
    table, timings = build_table_timed(p, None, bound)
    report = verify_label(table, label)
    report.timings.update(timings)
    if alt_subgroup:
        report.alt_subgroup = _alt_subgroup_summary(p, label, report, bound)
    report.timings["total_seconds"] = time.perf_counter() - total0
    return report


def scan_primes(lo, hi, bound=DEFAULT_PRIME_BOUND, alt_subgroup=False):
    """Verify every orbit-representative label for every odd prime in [lo, hi].

    Returns a list of per-prime summary dicts, each deterministic apart
    from its "seconds" entry.
    """
    if lo > hi or lo < 1:
        raise UsageError(f"bad prime range {lo}..{hi}")
    primes = [p for p in range(lo, hi + 1) if is_odd_prime(p)]
    if not primes:
        raise UsageError(f"no odd primes in range {lo}..{hi}")
    return [scan_one_prime(p, bound, alt_subgroup) for p in primes]


def scan_one_prime(p, bound=DEFAULT_PRIME_BOUND, alt_subgroup=False):
    """Verify all orbit representatives for one prime; summary dict."""
    t0 = time.perf_counter()
    table, _ = build_table_timed(p, None, bound)
    table_checks, locus_size = run_table_checks(table)
    reps = label_orbits(table.class_table.group.quaternion)
    failures = []
    mults = []
    for rep_label in reps:
        report = verify_label(table, rep_label, table_checks, locus_size)
        mults.append(report.psi_multiplicity)
        if not report.overall_pass:
            failures.append({"label": list(rep_label),
                             "claims": report.claims, "checks": report.checks})
    summary = {
        "prime": p,
        "group_order": table.order,
        "labels_checked": len(reps),
        "psi_multiplicities": mults,
        "pass": not failures,
        "failures": failures,
        "seconds": time.perf_counter() - t0,
    }
    if alt_subgroup:
        ref = verify_label(table, default_label(p), table_checks, locus_size)
        alt = _alt_subgroup_summary(p, default_label(p), ref, bound)
        summary["alt_subgroup_pass"] = alt["pass"]
        summary["pass"] = summary["pass"] and alt["pass"]
    return summary
