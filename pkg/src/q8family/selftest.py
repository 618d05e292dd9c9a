"""Per-prime invariant suite: every structural property the library relies on.

This is the slow-but-independent path: the element-wise indicator sum, the
averaging form of induction, brute-force counts.  Each check reports one
line; the CLI turns any failure into exit code 3.
"""

import random
from dataclasses import dataclass

from .characters import (IDENTITY_MATRIX, Q8_ROWS, assemble_character_table,
                         check_first_orthogonality, check_second_orthogonality,
                         default_label, fs_indicator_direct, label_orbit,
                         label_orbits, stabilizer_in_q, tensor_square_decompose)
from .cyclotomic import ZERO, Cyclotomic, cyclotomic_polynomial, root_of_unity
from .errors import InvariantError
from .groups import (DEFAULT_PRIME_BOUND, build_group, conjugacy_classes,
                     count_square_roots_of_identity, require_odd_prime,
                     square_locus)

ASSOCIATIVITY_SAMPLES = 300
FULL_ORACLE_PRIME_LIMIT = 7  # run the averaging oracle on all rows up to here


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def induced_by_averaging(label, ct):
    """Independent induction oracle: (1/|V|) sum over x of lambda(x g x^-1).

    lambda is the label's character on V extended by zero off V; this is
    the textbook averaging form of induction and never looks at orbits.
    """
    group = ct.group
    p = group.p
    a, b = label
    values = []
    for k in range(ct.n_classes):
        g = ct.rep_element(k)
        counts = [0] * p
        for x in group.elements:
            y = group.conj(x, g)
            if y[2:] == IDENTITY_MATRIX:
                counts[(a * y[0] + b * y[1]) % p] += 1
        values.append(Cyclotomic(p, counts) / (p * p))
    return tuple(values)


def q8_table_checks(q):
    """Orthonormality of the five Q8 rows over class sizes (1, 1, 2, 2, 2)."""
    sizes = (1, 1, 2, 2, 2)
    for i, (_, f) in enumerate(Q8_ROWS):
        for j, (_, g) in enumerate(Q8_ROWS):
            total = sum(s * x * y for s, x, y in zip(sizes, f, g))
            if total != (8 if i == j else 0):
                return False
    return Q8_ROWS[4][1] == (2, -2, 0, 0, 0)


def run_selftest(p, bound=DEFAULT_PRIME_BOUND):
    """All invariant checks for one prime; returns the per-check results."""
    require_odd_prime(p, bound)
    results = []

    def check(name, ok, detail=""):
        results.append(CheckResult(name, bool(ok), detail))

    # exact arithmetic used by everything below
    zeta_sum = sum((root_of_unity(p, k) for k in range(p)), ZERO)
    phi_p = cyclotomic_polynomial(p)
    z1 = root_of_unity(p, 1)
    check("cyclotomic_basics",
          zeta_sum == 0 and phi_p == tuple([1] * p)
          and z1.conjugate().conjugate() == z1,
          f"sum of p-th roots = {zeta_sum}; Phi_p all-ones")

    group = build_group(p, bound=bound)
    q = group.quaternion
    order = len(group)
    check("quaternion_subgroup", True,
          f"X={q.x.entries()} Y={q.y.entries()}, relations verified at build")

    ident = group.identity
    inverses_ok = all(group.mul(e, group.inv(e)) == ident for e in group.elements)
    rng = random.Random(0)
    assoc_ok = True
    for _ in range(ASSOCIATIVITY_SAMPLES):
        g, h, k = (group.elements[rng.randrange(order)] for _ in range(3))
        if group.mul(group.mul(g, h), k) != group.mul(g, group.mul(h, k)):
            assoc_ok = False
            break
    check("group_axioms", inverses_ok and assoc_ok,
          f"|G| = {order}; inverses all, associativity on {ASSOCIATIVITY_SAMPLES} triples")

    z_elem = (0, 0) + q.z.entries()
    inverts = all(
        group.conj(z_elem, (v0, v1) + IDENTITY_MATRIX)
        == ((-v0) % p, (-v1) % p) + IDENTITY_MATRIX
        for v0 in range(p) for v1 in range(p))
    check("z_inverts_core", inverts, "conjugation by z negates every v in V")

    ct = conjugacy_classes(group)
    check("class_partition",
          sum(ct.sizes) == order
          and all(order % s == 0 for s in ct.sizes)
          and all(s * c == order for s, c in zip(ct.sizes, ct.centralizer_orders)),
          f"{ct.n_classes} classes, sizes {sorted(ct.sizes)}")
    expected_classes = 5 + (p * p - 1) // 8
    check("class_count", ct.n_classes == expected_classes,
          f"{ct.n_classes} = 5 + ({p}^2-1)/8")

    sq_ok = all(
        ct.class_of[group.index[group.mul(e, e)]] == ct.square_map[ct.class_of[i]]
        for i, e in enumerate(group.elements))
    check("square_map_total", sq_ok, "square map agrees on 100% of elements")

    roots = count_square_roots_of_identity(ct)
    check("square_roots_count", roots == 1 + p * p,
          f"{roots} solutions of g^2 = 1; predicted 1 + p^2 = {1 + p * p}")

    z_entries = q.z.entries()
    locus = square_locus(group)
    expected_locus = {e for e in group.elements
                      if e[2:] in (IDENTITY_MATRIX, z_entries)}
    vz_ok = all(group.mul(e, e) == ident
                for e in group.elements if e[2:] == z_entries)
    check("square_locus", locus == expected_locus and len(locus) == 2 * p * p and vz_ok,
          f"|{{g : g^2 in V}}| = {len(locus)} = 2 p^2; every (v z)^2 = 1")

    nontrivial = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    stab_ok = all(len(stabilizer_in_q(q, l)) == 1 for l in nontrivial)
    check("label_stabilizers", stab_ok,
          f"all {len(nontrivial)} nontrivial labels have trivial stabilizer in Q")

    orbits = label_orbits(q)
    orbit_sizes_ok = all(len(label_orbit(q, l)) == 8 for l in orbits)
    check("label_orbits",
          len(orbits) == (p * p - 1) // 8 and orbit_sizes_ok,
          f"orbit count {len(orbits)} = ({p}^2-1)/8, all of size 8")

    check("q8_table", q8_table_checks(q),
          "5 rows orthonormal over Q8; degree-2 values (2, -2, 0, 0, 0)")

    table = assemble_character_table(ct)
    rows = table.rows
    check("row_count", len(rows) == ct.n_classes,
          f"{len(rows)} rows = {ct.n_classes} classes")
    check("degree_sum", sum(r.degree ** 2 for r in rows) == order,
          f"sum of degree^2 = {order} = |G|")

    values_list = [r.values for r in rows]
    try:
        check_first_orthogonality(ct, values_list)
        check("first_orthogonality", True, "all row pairs exactly orthonormal")
    except InvariantError as e:
        check("first_orthogonality", False, str(e))
    try:
        check_second_orthogonality(ct, values_list)
        check("second_orthogonality", True, "all class pairs match centralizer orders")
    except InvariantError as e:
        check("second_orthogonality", False, str(e))

    induced_rows = [r for r in rows if r.name.startswith("ind_")]
    vanish = all(
        r.values[k].is_zero()
        for r in induced_rows
        for k in range(ct.n_classes) if ct.rep_element(k)[2:] != IDENTITY_MATRIX)
    check("induced_vanish_off_core", vanish,
          "every induced row is zero outside V")

    if p <= FULL_ORACLE_PRIME_LIMIT:
        oracle_labels = list(orbits)
    else:
        oracle_labels = [min(label_orbit(q, default_label(p)))]
    oracle_ok = all(
        induced_by_averaging(l, ct) == table.row(f"ind_{l[0]}_{l[1]}").values
        for l in oracle_labels)
    check("induction_oracle", oracle_ok,
          f"averaging formula matches orbit sums on {len(oracle_labels)} row(s)")

    ind_pairs = [(r.indicator, fs_indicator_direct(ct, r.values)) for r in rows]
    check("indicator_oracle", all(a == b for a, b in ind_pairs),
          "class-formula indicator = element-wise sum on every row")

    negatives = [r.name for r in rows if r.indicator == -1]
    check("indicator_signs",
          negatives == ["psi"] and all(r.indicator == 1 for r in rows if r.name != "psi"),
          "exactly one indicator -1, on the degree-2 row")

    fs_sum = sum(r.indicator * r.degree for r in rows)
    check("fs_sum_rule", fs_sum == roots == 1 + p * p,
          f"sum rule: {fs_sum} = 1 + {p}^2")

    orders_ok = all(v.n in (1, p) for r in rows for v in r.values)
    inflated_ok = all(
        v.as_rational() is not None and v.as_rational().denominator == 1
        for r in rows if not r.name.startswith("ind_") for v in r.values)
    check("values_in_base_field", orders_ok and inflated_ok,
          "values lie in Q(zeta_p); inflated rows are rational integers")

    chi = table.induced_row_for_label(default_label(p))
    dec = tensor_square_decompose(table, chi)
    weight = sum(m * table.row(nm).degree for nm, m in dec.items())
    check("tensor_square",
          all(m >= 0 for m in dec.values()) and weight == 64
          and dec["triv"] == 1 and dec["psi"] >= 1,
          f"multiplicities >= 0, weight sum {weight} = 64, "
          f"[triv] = {dec['triv']}, [psi] = {dec['psi']}")

    return results
