"""Irreducible characters of G = (C_p x C_p) : Q8, built by hand.

The table has two kinds of rows: the five characters of Q8 inflated along
G -> G/V, and one induced character per orbit of nontrivial characters of
V under the Q8 action.  Assembly asserts the counting identities and full
first orthogonality before returning, and attaches a Frobenius-Schur
indicator to every row.

Characters of V are labelled by pairs (a, b) of residues: the label (a, b)
sends v to zeta_p^(a v0 + b v1).  A matrix M moves labels by the
inverse-transpose, matching the convention that M sends the character
lambda to v |-> lambda(M^-1 v).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .cyclotomic import ZERO, Cyclotomic
from .errors import InvariantError, UsageError
from .groups import DEFAULT_PRIME_BOUND, build_group, conjugacy_classes

IDENTITY_MATRIX = (1, 0, 0, 1)

# values over the Q8 class order {1}, {z}, {+-X}, {+-Y}, {+-XY}
Q8_ROWS = (
    ("triv", (1, 1, 1, 1, 1)),
    ("linX", (1, 1, 1, -1, -1)),
    ("linY", (1, 1, -1, 1, -1)),
    ("linXY", (1, 1, -1, -1, 1)),
    ("psi", (2, -2, 0, 0, 0)),
)


def q8_character_table():
    """The five irreducible characters of Q8 as (name, values) pairs."""
    return Q8_ROWS


# -- labels and the Q8 action on them ---------------------------------------


def normalize_label(label, p):
    a, b = label
    return (a % p, b % p)


def default_label(p):
    """Lexicographically smallest nontrivial label."""
    return (0, 1)


def label_action(m, label):
    """Label of the moved character: inverse-transpose times the label."""
    p = m.p
    l0, l1 = label
    # M^-1 = [[d,-b],[-c,a]] for det 1; transpose it
    return ((m.d * l0 - m.c * l1) % p, (-m.b * l0 + m.a * l1) % p)


def stabilizer_in_q(q, label):
    """All matrices of Q fixing the label."""
    return tuple(m for m in q.elements if label_action(m, label) == label)


def label_orbit(q, label):
    """The orbit of the label under Q, sorted."""
    return tuple(sorted({label_action(m, label) for m in q.elements}))


def label_orbits(q):
    """Lexicographically minimal representatives of the nontrivial orbits.

    Every nontrivial orbit must have size exactly 8 (trivial stabilizer);
    anything else is an internal error.
    """
    p = q.p
    seen = set()
    reps = []
    for a in range(p):
        for b in range(p):
            label = (a, b)
            if label == (0, 0) or label in seen:
                continue
            orbit = label_orbit(q, label)
            if len(orbit) != 8:
                raise InvariantError(f"label orbit of {label} has size {len(orbit)}, not 8")
            reps.append(label)
            seen.update(orbit)
    if len(reps) != (p * p - 1) // 8:
        raise InvariantError("wrong number of label orbits")
    return tuple(reps)


# -- the two row constructions ------------------------------------------------


def induced_values(label, ct):
    """Induce the label's character of V up to G: orbit sums on V, zero off V."""
    label = normalize_label(label, ct.p)
    if label == (0, 0):
        raise UsageError("label must be nontrivial; the trivial character inflates instead")
    p = ct.p
    orbit = label_orbit(ct.group.quaternion, label)
    if len(orbit) != 8:
        raise InvariantError("induced from a label with nontrivial stabilizer")
    values = []
    for k in range(ct.n_classes):
        e = ct.rep_element(k)
        if e[2:] != IDENTITY_MATRIX:
            values.append(ZERO)
            continue
        v0, v1 = e[0], e[1]
        counts = [0] * p
        for a, b in orbit:
            counts[(a * v0 + b * v1) % p] += 1
        values.append(Cyclotomic(p, counts))
    return tuple(values)


def inflated_values(q8_values, ct):
    """Pull a Q8 character back to G along the quotient map G -> Q."""
    class_of = ct.group.quaternion.class_of
    return tuple(
        Cyclotomic(1, [q8_values[class_of[ct.rep_element(k)[2:]]]])
        for k in range(ct.n_classes)
    )


# -- inner products and indicators --------------------------------------------


def inner_product(ct, f, g):
    """Exact <f, g> = (1/|G|) sum over classes |K| f(K) conj(g(K))."""
    total = ZERO
    for size, fv, gv in zip(ct.sizes, f, g):
        if fv.is_zero() or gv.is_zero():
            continue
        total = total + size * (fv * gv.conjugate())
    r = total.as_rational()
    if r is None:
        raise InvariantError("inner product of class functions is not rational")
    return r / ct.order


def restriction_to_core_inner(ct, values):
    """Exact [f restricted to V, trivial character of V]."""
    total = ZERO
    n_core = 0
    for k in range(ct.n_classes):
        if ct.rep_element(k)[2:] == IDENTITY_MATRIX:
            n_core += ct.sizes[k]
            total = total + ct.sizes[k] * values[k]
    if n_core != ct.p ** 2:
        raise InvariantError("classes inside V do not cover V")
    r = total.as_rational()
    if r is None:
        raise InvariantError("restriction inner product is not rational")
    return r / n_core


def _rational_integer(value, what):
    if value.denominator != 1:
        raise InvariantError(f"{what} is not a rational integer: {value}")
    return int(value)


def fs_indicator(ct, values):
    """Frobenius-Schur indicator via the class formula and the square map."""
    total = ZERO
    for size, k2 in zip(ct.sizes, ct.square_map):
        v = values[k2]
        if not v.is_zero():
            total = total + size * v
    r = total.as_rational()
    if r is None:
        raise InvariantError("indicator sum is not rational")
    return _rational_integer(r / ct.order, "Frobenius-Schur indicator")


def fs_indicator_direct(ct, values):
    """The same indicator as a literal sum of chi(g^2) over all group elements."""
    group = ct.group
    n = 1
    for v in values:
        n = lcm(n, v.n)
    lifted = [v.coeffs_at(n) for v in values]
    width = len(lifted[0])
    acc = [0] * width
    index, class_of = group.index, ct.class_of
    for e in group.elements:
        c = lifted[class_of[index[group.mul(e, e)]]]
        acc = [x + y for x, y in zip(acc, c)]
    r = Cyclotomic(n, acc).as_rational()
    if r is None:
        raise InvariantError("element-wise indicator sum is not rational")
    return _rational_integer(r / ct.order, "element-wise Frobenius-Schur indicator")


# -- table assembly ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CharRow:
    name: str
    values: tuple
    degree: int
    indicator: int


@dataclass(eq=False)
class CharacterTable:
    class_table: object
    rows: tuple

    @property
    def prime(self):
        return self.class_table.p

    @property
    def order(self):
        return self.class_table.order

    @cached_property
    def row_index_by_name(self):
        return {r.name: i for i, r in enumerate(self.rows)}

    @cached_property
    def psi_index(self):
        """Index of the unique degree-2 row."""
        hits = [i for i, r in enumerate(self.rows) if r.degree == 2]
        if len(hits) != 1:
            raise InvariantError(f"expected exactly one degree-2 row, found {len(hits)}")
        return hits[0]

    def row(self, name):
        return self.rows[self.row_index_by_name[name]]

    def induced_row_for_label(self, label):
        """The induced row whose label orbit contains the given label."""
        label = normalize_label(label, self.prime)
        if label == (0, 0):
            raise UsageError("label must be nontrivial")
        rep = min(label_orbit(self.class_table.group.quaternion, label))
        return self.row(f"ind_{rep[0]}_{rep[1]}")


def check_first_orthogonality(ct, values_list):
    """<row_i, row_j> = delta_ij, exactly, for all pairs."""
    for i, f in enumerate(values_list):
        for j in range(i, len(values_list)):
            got = inner_product(ct, f, values_list[j])
            want = Fraction(1) if i == j else Fraction(0)
            if got != want:
                raise InvariantError(
                    f"first orthogonality fails at rows ({i}, {j}): got {got}")


def check_second_orthogonality(ct, values_list):
    """Column relations: sum over rows of chi(K) conj(chi(K')) = delta |C(K)|."""
    conj_cols = [
        [vals[k].conjugate() for vals in values_list] for k in range(ct.n_classes)
    ]
    for k in range(ct.n_classes):
        for k2 in range(k, ct.n_classes):
            total = ZERO
            for vals, cv in zip(values_list, conj_cols[k2]):
                v = vals[k]
                if not (v.is_zero() or cv.is_zero()):
                    total = total + v * cv
            want = ct.centralizer_orders[k] if k == k2 else 0
            if total != want:
                raise InvariantError(
                    f"second orthogonality fails at classes ({k}, {k2})")


def assemble_character_table(ct):
    """All irreducible characters of G, with counting and orthogonality asserted."""
    named = [(name, inflated_values(vals, ct), vals[0]) for name, vals in Q8_ROWS]
    for rep in label_orbits(ct.group.quaternion):
        named.append((f"ind_{rep[0]}_{rep[1]}", induced_values(rep, ct), 8))

    if len(named) != ct.n_classes:
        raise InvariantError(
            f"row count {len(named)} != class count {ct.n_classes}")
    if sum(d * d for _, _, d in named) != ct.order:
        raise InvariantError("degrees squared do not sum to |G|")
    for name, values, degree in named:
        if values[0] != degree:
            raise InvariantError(f"row {name}: value at the identity != degree")
    check_first_orthogonality(ct, [v for _, v, _ in named])

    rows = []
    for name, values, degree in named:
        ind = fs_indicator(ct, values)
        if ind not in (-1, 0, 1):
            raise InvariantError(f"indicator of irreducible row {name} is {ind}")
        rows.append(CharRow(name=name, values=values, degree=degree, indicator=ind))
    return CharacterTable(class_table=ct, rows=tuple(rows))


def character_table(p, quaternion=None, bound=DEFAULT_PRIME_BOUND):
    """Build everything for one prime: group, classes, then the table."""
    group = build_group(p, quaternion, bound)
    return assemble_character_table(conjugacy_classes(group))


def tensor_square_decompose(table, row):
    """Multiplicities of every table row in the pointwise square of `row`.

    Multiplicities must be non-negative integers and weight-sum to the
    squared degree; anything else means the table is corrupt.
    """
    ct = table.class_table
    squared = tuple(v * v for v in row.values)
    out = {}
    for r in table.rows:
        m = inner_product(ct, squared, r.values)
        mi = _rational_integer(m, f"multiplicity of {r.name}")
        if mi < 0:
            raise InvariantError(f"negative multiplicity {mi} of {r.name}")
        out[r.name] = mi
    if sum(m * table.row(nm).degree for nm, m in out.items()) != row.degree ** 2:
        raise InvariantError("tensor square multiplicities do not weight-sum to degree^2")
    return out
