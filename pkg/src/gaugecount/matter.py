"""Matter content: group actions on finite sets and unitary representations.

Character values are exact cyclotomic numbers.  Numeric representation
matrices are admitted (validated to 1e-9), and every character extracted
from them goes through eigenvalue snapping: eigenvalues of a finite-order
unitary matrix are roots of unity, so each one is snapped (tolerance 1e-6)
to an exact root before any product or sum is formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .cyclo import Cyclotomic, snap_to_root_of_unity
from .errors import (
    BadParams,
    ClassInconsistency,
    DimTooLarge,
    GroupMismatch,
    NotAHomomorphism,
    ParseError,
)
from .groups import (
    ConjugacyClassTable,
    CosetSpace,
    FiniteGroup,
    SubgroupHandle,
    coset_space,
    direct_product,
    same_group,
    subgroup_as_group,
)

NUMERIC_TOL = 1e-9
SNAP_TOL = 1e-6
FOCK_DIM_CAP = 6


# ---------------------------------------------------------------------------
# class functions

@dataclass(frozen=True)
class ClassFunction:
    """One exact value per conjugacy class."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def value_at(self, g: int, classes: ConjugacyClassTable) -> Cyclotomic:
        return self.values[classes.class_of[g]]


def constant_class_function(classes: ConjugacyClassTable, value=1) -> ClassFunction:
    v = value if isinstance(value, Cyclotomic) else Cyclotomic.rational(value)
    return ClassFunction(classes.group, (v,) * classes.n_classes)


# ---------------------------------------------------------------------------
# group actions on finite sets

@dataclass(frozen=True)
class GroupAction:
    """Left action of a group on {0..set_size-1} as a full lookup table."""

    group: FiniteGroup
    set_size: int
    table: tuple[tuple[int, ...], ...]  # table[g][s] = g . s

    def act(self, g: int, s: int) -> int:
        return self.table[g][s]


ActionViolation = tuple[str, tuple[int, ...]]


def validate_action(A: GroupAction) -> Optional[ActionViolation]:
    """Exhaustive check of the action axioms; None when valid."""
    G, n = A.group, A.set_size
    if len(A.table) != G.order or any(len(r) != n for r in A.table):
        return ("shape", ())
    e = G.identity
    for s in range(n):
        if A.table[e][s] != s:
            return ("identity", (s,))
    for g1 in range(G.order):
        for g2 in range(G.order):
            g12 = G.mul(g1, g2)
            for s in range(n):
                if A.table[g1][A.table[g2][s]] != A.table[g12][s]:
                    return ("compatibility", (g1, g2, s))
    return None


def action_left_mult(G: FiniteGroup) -> GroupAction:
    """G acting on itself by left multiplication (free and transitive)."""
    return GroupAction(G, G.order, G.mul_table)


def action_coset(G: FiniteGroup, H: SubgroupHandle) -> GroupAction:
    """G acting on left cosets of H (transitive)."""
    cs = coset_space(G, H)
    table = tuple(
        tuple(cs.coset_of[G.mul(g, r)] for r in cs.reps)
        for g in range(G.order)
    )
    return GroupAction(G, cs.n_cosets, table)


def action_trivial(G: FiniteGroup, n_points: int) -> GroupAction:
    if n_points < 1:
        raise BadParams(f"need at least one point, got {n_points}")
    row = tuple(range(n_points))
    return GroupAction(G, n_points, (row,) * G.order)


def action_product(A: GroupAction, B: GroupAction) -> GroupAction:
    """Diagonal action on the cartesian product of the two sets."""
    if not same_group(A.group, B.group):
        raise GroupMismatch("actions live over different groups")
    nb = B.set_size
    table = tuple(
        tuple(A.table[g][sa] * nb + B.table[g][sb]
              for sa in range(A.set_size) for sb in range(nb))
        for g in range(A.group.order)
    )
    return GroupAction(A.group, A.set_size * nb, table)


def action_principal_chiral(G: FiniteGroup) -> GroupAction:
    """G x G acting on G by (a,b) . x = a x b^-1; kernel is the diagonal center."""
    GG = direct_product(G, G)
    n = G.order
    table = tuple(
        tuple(G.mul(G.mul(a, x), G.inv(b)) for x in range(n))
        for a in range(n) for b in range(n)
    )
    return GroupAction(GG, n, table)


def orbits(A: GroupAction) -> tuple[tuple[int, ...], ...]:
    seen = [False] * A.set_size
    out = []
    for s in range(A.set_size):
        if seen[s]:
            continue
        orb = sorted({A.table[g][s] for g in range(A.group.order)})
        for x in orb:
            seen[x] = True
        out.append(tuple(orb))
    return tuple(out)


def fixed_point_count(A: GroupAction, g: int) -> int:
    row = A.table[g]
    return sum(1 for s in range(A.set_size) if row[s] == s)


def fixed_point_character(A: GroupAction, classes: ConjugacyClassTable) -> ClassFunction:
    """Per-class fixed-point counts, verified constant on sampled class members."""
    if not same_group(A.group, classes.group):
        raise GroupMismatch("action and class table use different groups")
    values = []
    for c in range(classes.n_classes):
        members = classes.members(c)
        sample = members[:3]
        counts = [fixed_point_count(A, g) for g in sample]
        if len(set(counts)) != 1:
            raise ClassInconsistency(
                f"fixed-point count varies inside class {c}: {counts}")
        values.append(Cyclotomic.rational(counts[0]))
    return ClassFunction(A.group, tuple(values))


# ---------------------------------------------------------------------------
# exact matrix helpers

ExactMatrix = tuple[tuple[Cyclotomic, ...], ...]


def _as_cyclo(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    return Cyclotomic.rational(v)


def exact_matrix(rows: Sequence[Sequence]) -> ExactMatrix:
    return tuple(tuple(_as_cyclo(v) for v in row) for row in rows)


def mat_mul_exact(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = Cyclotomic.zero()
            for k in range(m):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_identity_exact(n: int) -> ExactMatrix:
    one, zero = Cyclotomic.one(), Cyclotomic.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_det_exact(m: ExactMatrix) -> Cyclotomic:
    """Determinant by cofactor expansion; fine for the small dims used here."""
    n = len(m)
    if n == 0:
        return Cyclotomic.one()
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Cyclotomic.zero()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = tuple(tuple(row[c] for c in range(n) if c != j) for row in m[1:])
        term = m[0][j] * mat_det_exact(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def mat_to_numpy(m: ExactMatrix) -> np.ndarray:
    return np.array([[v.to_complex() for v in row] for row in m], dtype=complex)


# ---------------------------------------------------------------------------
# unitary representations

@dataclass(frozen=True)
class UnitaryRep:
    """A unitary matrix representation, one matrix per group element.

    `exact` carries cyclotomic entries when available; `numeric` is always
    derivable.  Characters computed from numeric-only reps go through
    eigenvalue snapping and stay exact.
    """

    group: FiniteGroup
    dim: int
    exact: Optional[tuple[ExactMatrix, ...]]
    numeric: tuple  # tuple of numpy arrays, read-only by convention

    def matrix(self, g: int) -> np.ndarray:
        return self.numeric[g]

    def exact_matrix_of(self, g: int) -> ExactMatrix:
        if self.exact is None:
            raise BadParams("representation has no exact entries")
        return self.exact[g]

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def rep_from_exact(G: FiniteGroup, matrices: Sequence[Sequence[Sequence]]) -> UnitaryRep:
    if len(matrices) != G.order:
        raise BadParams(f"{len(matrices)} matrices for group of order {G.order}")
    mats = tuple(exact_matrix(m) for m in matrices)
    dim = len(mats[0])
    if any(len(m) != dim or any(len(r) != dim for r in m) for m in mats):
        raise BadParams("matrices are not all square of equal dimension")
    numeric = tuple(mat_to_numpy(m) for m in mats)
    rep = UnitaryRep(G, dim, mats, numeric)
    _validate_rep_numeric(rep)
    return rep


def rep_from_numeric(G: FiniteGroup, matrices: Sequence[np.ndarray]) -> UnitaryRep:
    if len(matrices) != G.order:
        raise BadParams(f"{len(matrices)} matrices for group of order {G.order}")
    numeric = tuple(np.asarray(m, dtype=complex) for m in matrices)
    dim = numeric[0].shape[0]
    if any(m.shape != (dim, dim) for m in numeric):
        raise BadParams("matrices are not all square of equal dimension")
    rep = UnitaryRep(G, dim, None, numeric)
    _validate_rep_numeric(rep)
    return rep


def _validate_rep_numeric(rep: UnitaryRep) -> None:
    G, d = rep.group, rep.dim
    eye = np.eye(d)
    if np.max(np.abs(rep.numeric[G.identity] - eye)) > NUMERIC_TOL:
        raise NotAHomomorphism("identity element is not mapped to the identity matrix")
    for g in range(G.order):
        U = rep.numeric[g]
        if np.max(np.abs(U @ U.conj().T - eye)) > NUMERIC_TOL:
            raise NotAHomomorphism(f"matrix for element {g} is not unitary")
    gens = G.generators if G.generators else tuple(range(G.order))
    for g in gens:
        Ug = rep.numeric[g]
        for a in range(G.order):
            if np.max(np.abs(rep.numeric[a] @ Ug - rep.numeric[G.mul(a, g)])) > NUMERIC_TOL:
                raise NotAHomomorphism(f"multiplicativity fails at ({a}, {g})")


def rep_from_generator_images(G: FiniteGroup, images: Sequence[Sequence[Sequence]]) -> UnitaryRep:
    """Extend exact matrices on G's stored generators to the whole group."""
    if G.generators is None:
        raise BadParams("group has no stored generating set")
    gens = G.generators
    if len(images) != len(gens):
        raise BadParams(f"{len(images)} images for {len(gens)} generators")
    imgs = [exact_matrix(m) for m in images]
    dim = len(imgs[0]) if imgs else 1
    mats: list[Optional[ExactMatrix]] = [None] * G.order
    mats[G.identity] = mat_identity_exact(dim)
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = G.mul(x, g)
                if mats[y] is None:
                    mats[y] = mat_mul_exact(mats[x], imgs[gi])
                    nxt.append(y)
        frontier = nxt
    if any(m is None for m in mats):
        raise BadParams("stored generators do not generate the group")
    # M[x*g] == M[x] M[g] for all x and generators g forces multiplicativity
    for gi, g in enumerate(gens):
        for x in range(G.order):
            if mat_mul_exact(mats[x], imgs[gi]) != mats[G.mul(x, g)]:
                raise NotAHomomorphism(f"generator images are inconsistent at ({x}, {g})")
    return rep_from_exact(G, mats)


def trivial_rep(G: FiniteGroup, dim: int = 1) -> UnitaryRep:
    eye = mat_identity_exact(dim)
    return rep_from_exact(G, (eye,) * G.order)


def permutation_rep(A: GroupAction) -> UnitaryRep:
    mats = []
    for g in range(A.group.order):
        row = A.table[g]
        mats.append(tuple(tuple(1 if row[j] == i else 0 for j in range(A.set_size))
                          for i in range(A.set_size)))
    return rep_from_exact(A.group, mats)


def dihedral_rotation_rep(G: FiniteGroup, n: int) -> UnitaryRep:
    """Faithful 2-dim rep of the order-2n dihedral group built by dihedral_group."""
    if G.order != 2 * n:
        raise BadParams("group order does not match dihedral parameter")
    half = Fraction(1, 2)
    i_unit = Cyclotomic.root_of_unity(4)
    mats = []
    for p in range(2 * n):
        f, a = divmod(p, n)
        c = half * (Cyclotomic.root_of_unity(n, a) + Cyclotomic.root_of_unity(n, (-a) % n))
        s = -i_unit * half * (Cyclotomic.root_of_unity(n, a) - Cyclotomic.root_of_unity(n, (-a) % n))
        if not f:
            mats.append(((c, -s), (s, c)))
        else:
            # reflection times rotation: diag(1,-1) . R(a)
            mats.append(((c, -s), (-s, -c)))
    return rep_from_exact(G, mats)


def su2_fundamental_rep(G: FiniteGroup) -> UnitaryRep:
    """2-dim rep from stored unit-quaternion coordinates (Q8 and binary groups)."""
    from .groups import quaternion_coordinates
    from .quaternions import QN

    coords = quaternion_coordinates(G)
    if coords is None:
        raise BadParams("group carries no quaternion coordinates")

    r2 = Cyclotomic.root_of_unity(8) - Cyclotomic.root_of_unity(8, 3)
    r5 = 2 * (Cyclotomic.root_of_unity(5) + Cyclotomic.root_of_unity(5, 4)) + 1
    r10 = r2 * r5

    def qn_cyclo(p: QN) -> Cyclotomic:
        return Cyclotomic.rational(p[0]) + p[1] * r2 + p[2] * r5 + p[3] * r10

    i_unit = Cyclotomic.root_of_unity(4)
    mats = []
    for (w, x, y, z) in coords:
        cw, cx, cy, cz = qn_cyclo(w), qn_cyclo(x), qn_cyclo(y), qn_cyclo(z)
        mats.append(((cw + i_unit * cx, cy + i_unit * cz),
                     (-cy + i_unit * cz, cw - i_unit * cx)))
    return rep_from_exact(G, mats)


def rep_direct_sum(a: UnitaryRep, b: UnitaryRep) -> UnitaryRep:
    if not same_group(a.group, b.group):
        raise GroupMismatch("representations live over different groups")
    zero = Cyclotomic.zero()
    if a.is_exact and b.is_exact:
        mats = []
        for g in range(a.group.order):
            ma, mb = a.exact[g], b.exact[g]
            top = [row + (zero,) * b.dim for row in ma]
            bot = [(zero,) * a.dim + row for row in mb]
            mats.append(tuple(top + bot))
        return rep_from_exact(a.group, mats)
    mats_np = []
    for g in range(a.group.order):
        m = np.zeros((a.dim + b.dim, a.dim + b.dim), dtype=complex)
        m[: a.dim, : a.dim] = a.numeric[g]
        m[a.dim:, a.dim:] = b.numeric[g]
        mats_np.append(m)
    return rep_from_numeric(a.group, mats_np)


def rep_restrict(rep: UnitaryRep, H: SubgroupHandle) -> tuple[UnitaryRep, FiniteGroup]:
    """Restrict to a subgroup, reindexed as its own group."""
    sub, embed = subgroup_as_group(rep.group, H)
    if rep.is_exact:
        return rep_from_exact(sub, [rep.exact[g] for g in embed]), sub
    return rep_from_numeric(sub, [rep.numeric[g] for g in embed]), sub


# ---------------------------------------------------------------------------
# one-dimensional representations

@dataclass(frozen=True)
class OneDimRep:
    """A homomorphism into roots of unity, one exact value per element."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]


def one_dim_from_values(G: FiniteGroup, values: Sequence) -> OneDimRep:
    vals = tuple(_as_cyclo(v) for v in values)
    if len(vals) != G.order:
        raise BadParams(f"{len(vals)} values for group of order {G.order}")
    for a in range(G.order):
        for b in range(G.order):
            if vals[a] * vals[b] != vals[G.mul(a, b)]:
                raise NotAHomomorphism(f"values are not multiplicative at ({a}, {b})")
    return OneDimRep(G, vals)


def trivial_one_dim(G: FiniteGroup) -> OneDimRep:
    one = Cyclotomic.one()
    return OneDimRep(G, (one,) * G.order)


def zn_charge_rep(G: FiniteGroup, q: int) -> OneDimRep:
    """Charge-q character of the built-in cyclic group (element k is g^k)."""
    n = G.order
    expected = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    if G.mul_table != expected:
        raise BadParams("zn_charge_rep needs the built-in cyclic group layout")
    return OneDimRep(G, tuple(Cyclotomic.root_of_unity(n, (q * k) % n) for k in range(n)))


def det_rep(rep: UnitaryRep) -> OneDimRep:
    """Determinant character, exact via snapped eigenvalue products."""
    values = []
    for g in range(rep.group.order):
        values.append(_snapped_eigen_product(rep, g, lambda lam: lam))
    return OneDimRep(rep.group, tuple(values))


def one_dim_to_rep(chi: OneDimRep) -> UnitaryRep:
    return rep_from_exact(chi.group, [((v,),) for v in chi.values])


# ---------------------------------------------------------------------------
# characters from representations

def _snapped_eigenvalues(rep: UnitaryRep, g: int) -> list[Cyclotomic]:
    k = rep.group.element_order(g)
    eig = np.linalg.eigvals(rep.numeric[g])
    return [snap_to_root_of_unity(complex(lam), k, SNAP_TOL) for lam in eig]


def _snapped_eigen_product(rep: UnitaryRep, g: int, f: Callable) -> Cyclotomic:
    total = Cyclotomic.one()
    for lam in _snapped_eigenvalues(rep, g):
        total = total * f(lam)
    return total


def rep_character(rep: UnitaryRep, classes: ConjugacyClassTable) -> ClassFunction:
    """Per-class trace, exact (snapped eigenvalue sums)."""
    if not same_group(rep.group, classes.group):
        raise GroupMismatch("representation and class table use different groups")
    values = []
    for r in classes.reps:
        acc = Cyclotomic.zero()
        for lam in _snapped_eigenvalues(rep, r):
            acc = acc + lam
        values.append(acc)
    return ClassFunction(rep.group, tuple(values))


def fermion_site_character(rep: UnitaryRep, classes: ConjugacyClassTable,
                           sign: int = 1) -> ClassFunction:
    """Per-class det(1 + sign * rho), the trace over the mode Fock space.

    sign=+1 gives the plain Fock trace; sign=-1 the fermion-parity-weighted
    one.  Values are exact products of (1 + sign * root of unity).
    """
    if sign not in (1, -1):
        raise BadParams(f"sign must be +1 or -1, got {sign}")
    if not same_group(rep.group, classes.group):
        raise GroupMismatch("representation and class table use different groups")
    values = []
    for r in classes.reps:
        values.append(_snapped_eigen_product(rep, r, lambda lam: 1 + sign * lam))
    return ClassFunction(rep.group, tuple(values))


def det_character(rep: UnitaryRep, classes: ConjugacyClassTable,
                  inverse: bool = False) -> ClassFunction:
    """Per-class determinant of rho (or of rho at the inverse class)."""
    values = []
    for r in classes.reps:
        g = rep.group.inv(r) if inverse else r
        values.append(_snapped_eigen_product(rep, g, lambda lam: lam))
    return ClassFunction(rep.group, tuple(values))


def one_dim_class_values(chi: OneDimRep, classes: ConjugacyClassTable) -> ClassFunction:
    if not same_group(chi.group, classes.group):
        raise GroupMismatch("character and class table use different groups")
    vals = []
    for c, r in enumerate(classes.reps):
        v = chi.values[r]
        for g in classes.members(c)[:3]:
            if chi.values[g] != v:
                raise ClassInconsistency(f"one-dim values vary inside class {c}")
        vals.append(v)
    return ClassFunction(chi.group, tuple(vals))


# ---------------------------------------------------------------------------
# matter specifications

@dataclass(frozen=True)
class PureGauge:
    kind: str = "none"


@dataclass(frozen=True)
class ScalarMatter:
    action: GroupAction
    kind: str = "scalar"


@dataclass(frozen=True)
class ScalarMatterPerSite:
    actions: tuple[GroupAction, ...]
    kind: str = "scalar_per_site"


Vacuum = Union[str, OneDimRep]  # "trivial" | "staggered" | explicit character


@dataclass(frozen=True)
class FermionMatter:
    flavours: tuple[UnitaryRep, ...]
    spinor_count: int = 1
    vacuum: Vacuum = "trivial"
    kind: str = "fermion"

    def __post_init__(self):
        if self.spinor_count < 1:
            raise BadParams(f"spinor_count must be >= 1, got {self.spinor_count}")
        if not self.flavours:
            raise BadParams("at least one flavour representation is required")
        if isinstance(self.vacuum, str) and self.vacuum not in ("trivial", "staggered"):
            raise BadParams(f"unknown vacuum {self.vacuum!r}")
        for f in self.flavours:
            if f.dim > FOCK_DIM_CAP:
                raise DimTooLarge(
                    f"flavour dimension {f.dim} exceeds the cap {FOCK_DIM_CAP}")


MatterSpec = Union[PureGauge, ScalarMatter, ScalarMatterPerSite, FermionMatter]


def spinor_components_for_dirac(d: int) -> int:
    """Spinor component count 2^floor((d+1)/2) for naive or Wilson fermions in d space dims."""
    if d < 1:
        raise BadParams(f"need at least one spatial dimension, got {d}")
    return 2 ** ((d + 1) // 2)


# ---------------------------------------------------------------------------
# text formats

def action_to_text(A: GroupAction) -> str:
    lines = [f"action {A.group.order} {A.set_size}"]
    for row in A.table:
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def action_from_text(text: str, G: FiniteGroup) -> GroupAction:
    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise ParseError("empty action file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "action":
        raise ParseError("expected 'action |G| |S|'", 1)
    try:
        order, n = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("non-integer header fields", 1)
    if order != G.order:
        raise ParseError(f"file is for group order {order}, expected {G.order}", 1)
    if n < 1:
        raise ParseError(f"bad set size {n}", 1)
    if len([ln for ln in lines[1:] if ln.strip()]) != order:
        raise ParseError(f"expected {order} rows", len(lines))
    table = []
    for i, ln in enumerate(ln for ln in lines[1:] if ln.strip()):
        parts = ln.split()
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise ParseError("non-integer table entry", 2 + i)
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise ParseError(f"row must be {n} indices in 0..{n - 1}", 2 + i)
        table.append(tuple(row))
    A = GroupAction(G, n, tuple(table))
    bad = validate_action(A)
    if bad is not None:
        raise ParseError(f"not a group action: {bad[0]} violated at {bad[1]}", 1)
    return A


def rep_to_text(rep: UnitaryRep) -> str:
    lines = [f"rep {rep.group.order} {rep.dim}"]
    for g in range(rep.group.order):
        m = rep.numeric[g]
        for i in range(rep.dim):
            parts = []
            for j in range(rep.dim):
                parts.append(f"{m[i, j].real:.17g} {m[i, j].imag:.17g}")
            lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def rep_from_text(text: str, G: FiniteGroup) -> UnitaryRep:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty rep file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "rep":
        raise ParseError("expected 'rep |G| dim'", 1)
    try:
        order, dim = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("non-integer header fields", 1)
    if order != G.order:
        raise ParseError(f"file is for group order {order}, expected {G.order}", 1)
    if dim < 1:
        raise ParseError(f"bad dimension {dim}", 1)
    if len(lines) != 1 + order * dim:
        raise ParseError(f"expected {order * dim} matrix rows", len(lines))
    mats = []
    at = 1
    for g in range(order):
        rows = []
        for i in range(dim):
            parts = lines[at].split()
            at += 1
            if len(parts) != 2 * dim:
                raise ParseError(f"expected {2 * dim} numbers", at)
            try:
                vals = [float(p) for p in parts]
            except ValueError:
                raise ParseError("non-numeric matrix entry", at)
            rows.append([complex(vals[2 * j], vals[2 * j + 1]) for j in range(dim)])
        mats.append(np.array(rows, dtype=complex))
    return rep_from_numeric(G, mats)
