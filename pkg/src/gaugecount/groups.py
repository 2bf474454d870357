"""Finite groups as explicit multiplication tables.

Element 0 is the identity for every group constructed here; groups loaded
from files may place the identity elsewhere and record it in `identity`.
Conjugacy classes are ordered with the identity class first and the rest
ascending by their smallest element index, so all derived tables are
deterministic.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Optional, Sequence

from . import quaternions as qt
from .errors import (
    BadParams,
    ClosureOverflow,
    NotAGroup,
    NotASubgroup,
    ParseError,
    UnknownFamily,
)

ASSOC_EXHAUSTIVE_MAX = 200
ASSOC_SAMPLE_COUNT = 100_000
_ASSOC_SEED = 0x5EED


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table."""

    order: int
    mul_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[int, ...]
    identity: int
    labels: tuple[str, ...]
    generators: Optional[tuple[int, ...]] = None
    name: str = "G"

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul_table[self.mul_table[h][g]][self.inv_table[h]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul_table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    def is_abelian(self) -> bool:
        t = self.mul_table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a is b or (a.order == b.order and a.mul_table == b.mul_table)


# ---------------------------------------------------------------------------
# validation

def _check_latin_square(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    full = frozenset(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        if frozenset(row) != full:
            raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(table[i][j] for i in range(n)) != full:
            raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")


def _find_identity(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(table[i][e] == i for i in range(n)):
            return e
    raise NotAGroup("no identity element")


def _check_associativity(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n <= ASSOC_EXHAUSTIVE_MAX:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(_ASSOC_SEED)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(ASSOC_SAMPLE_COUNT)
        )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")


def validate_table(table: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Check the group axioms; return (identity, inverse table)."""
    if not table:
        raise NotAGroup("empty table")
    _check_latin_square(table)
    e = _find_identity(table)
    inv = [0] * len(table)
    for a, row in enumerate(table):
        inv[a] = row.index(e)
        if table[inv[a]][a] != e:
            raise NotAGroup(f"element {a} has no two-sided inverse")
    _check_associativity(table)
    return e, tuple(inv)


def group_from_table(
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    generators: Optional[Sequence[int]] = None,
    name: str = "G",
) -> FiniteGroup:
    e, inv = validate_table(table)
    n = len(table)
    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    elif len(labels) != n:
        raise BadParams(f"{len(labels)} labels for {n} elements")
    return FiniteGroup(
        order=n,
        mul_table=tuple(tuple(row) for row in table),
        inv_table=inv,
        identity=e,
        labels=tuple(labels),
        generators=tuple(generators) if generators is not None else None,
        name=name,
    )


# ---------------------------------------------------------------------------
# generic closure construction

def _generated_elements(gens: Sequence, mul: Callable, max_order: int):
    """BFS closure with the identity first; returns (elems, parent links)."""
    g0 = gens[0]
    prev, cur = g0, mul(g0, g0)
    steps = 1
    while cur != g0:
        prev, cur = cur, mul(cur, g0)
        steps += 1
        if steps > max_order:
            raise ClosureOverflow(f"generator order exceeds max_order={max_order}")
    ident = prev  # g^ord(g) just before the power walk revisits g
    elems = [ident]
    index = {ident: 0}
    parent: list[tuple[int, int]] = [(-1, -1)]
    head = 0
    while head < len(elems):
        x = elems[head]
        for gi, g in enumerate(gens):
            y = mul(x, g)
            if y not in index:
                if len(elems) >= max_order:
                    raise ClosureOverflow(f"closure exceeds max_order={max_order}")
                index[y] = len(elems)
                elems.append(y)
                parent.append((head, gi))
        head += 1
    return elems, index, parent


def build_from_generators(
    gens: Sequence,
    mul: Callable,
    max_order: int = 10_000,
    labeler: Callable = str,
    name: str = "G",
) -> FiniteGroup:
    """Close abstract generators under multiplication and index the result.

    Elements must be hashable with exact equality.  An empty generator list
    yields the trivial group.  Raises ClosureOverflow past max_order.
    """
    grp, _ = _build_from_generators(gens, mul, max_order, labeler, name)
    return grp


def _build_from_generators(gens, mul, max_order, labeler, name):
    if not gens:
        return trivial_group(), [None]
    elems, index, parent = _generated_elements(gens, mul, max_order)
    n = len(elems)
    k = len(gens)
    # one column of the table per generator, by object multiplication
    gen_cols = [[index[mul(x, g)] for x in elems] for g in gens]
    # remaining columns by parent decomposition: y = p * g implies
    # x*y = (x*p)*g, so col_y[x] = gen_col_g[col_p[x]]
    cols: list[Optional[list[int]]] = [None] * n
    cols[0] = list(range(n))
    for yi in range(1, n):
        p, gi = parent[yi]
        if p == 0:
            cols[yi] = gen_cols[gi]
        else:
            base = cols[p]
            gcol = gen_cols[gi]
            cols[yi] = [gcol[v] for v in base]
    table = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
    labels = tuple(labeler(x) for x in elems)
    gen_idx = tuple(index[g] for g in gens)
    grp = group_from_table(table, labels, gen_idx, name)
    if grp.identity != 0:
        raise NotAGroup("identity did not land at index 0")
    return grp, elems


# ---------------------------------------------------------------------------
# built-in families

def trivial_group() -> FiniteGroup:
    return FiniteGroup(1, ((0,),), (0,), 0, ("e",), (), "Z1")


@functools.lru_cache(maxsize=None)
def cyclic_group(n: int) -> FiniteGroup:
    if n < 1 or n > 1024:
        raise BadParams(f"cyclic order {n} out of range 1..1024")
    if n == 1:
        return trivial_group()
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inv = tuple((-a) % n for a in range(n))
    labels = ("e",) + tuple(f"g^{k}" if k > 1 else "g" for k in range(1, n))
    return FiniteGroup(n, table, inv, 0, labels, (1,), f"Z{n}")


@functools.lru_cache(maxsize=None)
def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: indices 0..n-1 are r^a, n..2n-1 are s r^a."""
    if n < 1 or n > 512:
        raise BadParams(f"dihedral parameter {n} out of range 1..512")

    def mul(p: int, q: int) -> int:
        f1, a1 = divmod(p, n)
        f2, a2 = divmod(q, n)
        # (s^f1 r^a1)(s^f2 r^a2) = s^(f1+f2) r^(a2-a1 if f2 else a1+a2)
        a = (a2 - a1) % n if f2 else (a1 + a2) % n
        return ((f1 + f2) % 2) * n + a

    table = tuple(tuple(mul(p, q) for q in range(2 * n)) for p in range(2 * n))

    def label(p):
        f, a = divmod(p, n)
        r = "e" if a == 0 else ("r" if a == 1 else f"r^{a}")
        return r if not f else ("s" if a == 0 else f"s*{r}")

    labels = tuple(label(p) for p in range(2 * n))
    gens = (1, n) if n >= 2 else (n,)
    return group_from_table(table, labels, gens, f"D{n}")


@functools.lru_cache(maxsize=None)
def symmetric_group(n: int) -> FiniteGroup:
    if n < 1 or n > 6:
        raise BadParams(f"symmetric parameter {n} out of range 1..6")
    if n == 1:
        return trivial_group()

    def mul(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(n))

    def label(p):
        seen, cycles = set(), []
        for s in range(n):
            if s in seen or p[s] == s:
                seen.add(s)
                continue
            cyc, x = [], s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = p[x]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles) if cycles else "e"

    transposition = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    gens = [transposition, cycle] if n > 2 else [transposition]
    import math
    return build_from_generators(gens, mul, max_order=math.factorial(n),
                                 labeler=label, name=f"S{n}")


@functools.lru_cache(maxsize=None)
def quaternion_group() -> FiniteGroup:
    i = qt.quat(qt.QN_ZERO, qt.QN_ONE, qt.QN_ZERO, qt.QN_ZERO)
    j = qt.quat(qt.QN_ZERO, qt.QN_ZERO, qt.QN_ONE, qt.QN_ZERO)
    return _quaternion_closure([i, j], 8, "Q8")


@functools.lru_cache(maxsize=None)
def binary_tetrahedral_group() -> FiniteGroup:
    half = qt.qn(Fraction(1, 2))
    omega = qt.quat(half, half, half, half)  # (1+i+j+k)/2
    i = qt.quat(qt.QN_ZERO, qt.QN_ONE, qt.QN_ZERO, qt.QN_ZERO)
    return _quaternion_closure([omega, i], 24, "2T")


@functools.lru_cache(maxsize=None)
def binary_octahedral_group() -> FiniteGroup:
    half = qt.qn(Fraction(1, 2))
    omega = qt.quat(half, half, half, half)
    hr2 = qt.qn(0, Fraction(1, 2))  # sqrt2/2
    u = qt.quat(hr2, hr2, qt.QN_ZERO, qt.QN_ZERO)  # (1+i)/sqrt2
    return _quaternion_closure([omega, u], 48, "2O")


@functools.lru_cache(maxsize=None)
def binary_icosahedral_group() -> FiniteGroup:
    half = qt.qn(Fraction(1, 2))
    omega = qt.quat(half, half, half, half)
    # t = (phi + i/phi + j)/2 with phi the golden ratio
    phi_half = qt.qn(Fraction(1, 4), 0, Fraction(1, 4))       # phi/2
    inv_phi_half = qt.qn(Fraction(-1, 4), 0, Fraction(1, 4))  # 1/(2 phi)
    t = qt.quat(phi_half, inv_phi_half, half, qt.QN_ZERO)
    return _quaternion_closure([omega, t], 120, "2I")


def _quaternion_closure(gens: list, expected_order: int, name: str) -> FiniteGroup:
    grp, elems = _build_from_generators(gens, qt.quat_mul, expected_order,
                                        qt.quat_label, name)
    if grp.order != expected_order:
        raise NotAGroup(f"{name} closed at order {grp.order}, expected {expected_order}")
    object.__setattr__(grp, "_quaternion_coords", tuple(elems))
    return grp


def quaternion_coordinates(G: FiniteGroup):
    """Unit-quaternion coordinates for groups built from quaternions, else None."""
    return getattr(G, "_quaternion_coords", None)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    n = A.order * B.order
    if n > 4096:
        raise BadParams(f"product order {n} exceeds 4096")
    nb = B.order

    def enc(a, b):
        return a * nb + b

    table = tuple(
        tuple(enc(A.mul_table[a1][a2], B.mul_table[b1][b2])
              for a2 in range(A.order) for b2 in range(nb))
        for a1 in range(A.order) for b1 in range(nb)
    )
    inv = tuple(enc(A.inv_table[a], B.inv_table[b])
                for a in range(A.order) for b in range(nb))
    labels = tuple(f"({A.labels[a]},{B.labels[b]})"
                   for a in range(A.order) for b in range(nb))
    gens: Optional[tuple[int, ...]] = None
    if A.generators is not None and B.generators is not None:
        gens = tuple(enc(g, B.identity) for g in A.generators) + \
               tuple(enc(A.identity, g) for g in B.generators)
    e = enc(A.identity, B.identity)
    return FiniteGroup(n, table, inv, e, labels, gens, f"{A.name}x{B.name}")


_FAMILIES = {
    "trivial": (trivial_group, 0),
    "cyclic": (cyclic_group, 1),
    "dihedral": (dihedral_group, 1),
    "symmetric": (symmetric_group, 1),
    "quaternion": (quaternion_group, 0),
    "binary_tetrahedral": (binary_tetrahedral_group, 0),
    "binary_octahedral": (binary_octahedral_group, 0),
    "binary_icosahedral": (binary_icosahedral_group, 0),
}


def builtin_group(family: str, params: Sequence[int] = ()) -> FiniteGroup:
    """Construct a named built-in group, e.g. builtin_group("cyclic", [4])."""
    if family == "direct_product":
        raise BadParams("build factors separately and call direct_product")
    if family not in _FAMILIES:
        raise UnknownFamily(f"unknown group family {family!r}")
    ctor, arity = _FAMILIES[family]
    params = list(params)
    if len(params) != arity:
        raise BadParams(f"{family} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# ---------------------------------------------------------------------------
# conjugacy classes

@dataclass(frozen=True)
class ConjugacyClassTable:
    """Conjugacy classes with deterministic ordering (identity class first)."""

    group: FiniteGroup
    class_of: tuple[int, ...]
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    inverse_class: tuple[int, ...]
    centralizer_sizes: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.reps)

    def members(self, c: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.group.order) if self.class_of[g] == c)


def conjugacy_classes(G: FiniteGroup) -> ConjugacyClassTable:
    n = G.order
    class_of = [-1] * n
    reps: list[int] = []
    sizes: list[int] = []
    scan_order = [G.identity] + [g for g in range(n) if g != G.identity]
    for g in scan_order:
        if class_of[g] >= 0:
            continue
        cid = len(reps)
        orbit = sorted({G.conj(h, g) for h in range(n)})
        for x in orbit:
            class_of[x] = cid
        reps.append(min(orbit))
        sizes.append(len(orbit))
    inverse_class = tuple(class_of[G.inv(r)] for r in reps)
    centralizer_sizes = tuple(n // s for s in sizes)
    return ConjugacyClassTable(
        group=G,
        class_of=tuple(class_of),
        reps=tuple(reps),
        sizes=tuple(sizes),
        inverse_class=inverse_class,
        centralizer_sizes=centralizer_sizes,
    )


def centralizer_order(G: FiniteGroup, g: int) -> int:
    """|C_G(g)| by direct enumeration."""
    return sum(1 for h in range(G.order) if G.mul(h, g) == G.mul(g, h))


# ---------------------------------------------------------------------------
# subgroups and cosets

@dataclass(frozen=True)
class SubgroupHandle:
    parent: FiniteGroup
    member_mask: tuple[bool, ...]
    order: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.member_mask) if m)

    def __contains__(self, g: int) -> bool:
        return self.member_mask[g]


def subgroup_from_elements(G: FiniteGroup, elems: Iterable[int]) -> SubgroupHandle:
    members = sorted(set(elems))
    if not members:
        raise NotASubgroup("empty element set")
    mask = [False] * G.order
    for g in members:
        if not 0 <= g < G.order:
            raise NotASubgroup(f"element {g} out of range")
        mask[g] = True
    if not mask[G.identity]:
        raise NotASubgroup("identity missing")
    for a in members:
        if not mask[G.inv(a)]:
            raise NotASubgroup(f"inverse of {a} missing")
        for b in members:
            if not mask[G.mul(a, b)]:
                raise NotASubgroup(f"product {a}*{b} escapes the subset")
    return SubgroupHandle(G, tuple(mask), len(members))


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> SubgroupHandle:
    seen = {G.identity}
    queue = [G.identity]
    gens = list(gens)
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g in gens:
            y = G.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    mask = tuple(i in seen for i in range(G.order))
    return SubgroupHandle(G, mask, len(seen))


def center(G: FiniteGroup) -> SubgroupHandle:
    elems = [g for g in range(G.order)
             if all(G.mul(g, h) == G.mul(h, g) for h in range(G.order))]
    return subgroup_from_elements(G, elems)


def normalizer(G: FiniteGroup, H: SubgroupHandle) -> SubgroupHandle:
    if not same_group(G, H.parent):
        raise NotASubgroup("subgroup belongs to a different group")
    members = H.elements
    elems = [g for g in range(G.order)
             if all(H.member_mask[G.conj(g, h)] for h in members)]
    return subgroup_from_elements(G, elems)


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets gH, ordered by smallest member; representative = smallest."""

    group: FiniteGroup
    subgroup: SubgroupHandle
    cosets: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    coset_of: tuple[int, ...]

    @property
    def n_cosets(self) -> int:
        return len(self.cosets)


def coset_space(G: FiniteGroup, H: SubgroupHandle) -> CosetSpace:
    if not same_group(G, H.parent):
        raise NotASubgroup("subgroup belongs to a different group")
    coset_of = [-1] * G.order
    cosets: list[tuple[int, ...]] = []
    reps: list[int] = []
    hs = H.elements
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        cid = len(cosets)
        members = sorted(G.mul(g, h) for h in hs)
        for x in members:
            coset_of[x] = cid
        cosets.append(tuple(members))
        reps.append(members[0])
    return CosetSpace(G, H, tuple(cosets), tuple(reps), tuple(coset_of))


def subgroup_as_group(G: FiniteGroup, H: SubgroupHandle) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Reindex a subgroup as a standalone group; returns (group, embedding)."""
    if not same_group(G, H.parent):
        raise NotASubgroup("subgroup belongs to a different group")
    embed = [G.identity] + [g for g in H.elements if g != G.identity]
    pos = {g: i for i, g in enumerate(embed)}
    table = tuple(tuple(pos[G.mul(a, b)] for b in embed) for a in embed)
    labels = tuple(G.labels[g] for g in embed)
    sub = group_from_table(table, labels, None, f"{G.name}.sub{H.order}")
    return sub, tuple(embed)


def first_proper_subgroup(G: FiniteGroup) -> SubgroupHandle:
    """Deterministic choice: first cyclic subgroup that is proper and nontrivial.

    Falls back to the trivial subgroup when none exists (e.g. prime cyclic).
    """
    for g in range(G.order):
        if g == G.identity:
            continue
        H = generated_subgroup(G, [g])
        if 1 < H.order < G.order:
            return H
    return subgroup_from_elements(G, [G.identity])


# ---------------------------------------------------------------------------
# text format: "order N", N table rows, optional "labels" section

def group_to_text(G: FiniteGroup) -> str:
    lines = [f"order {G.order}"]
    for row in G.mul_table:
        lines.append(" ".join(map(str, row)))
    lines.append("labels")
    lines.extend(G.labels)
    return "\n".join(lines) + "\n"


def group_from_text(text: str, name: str = "G") -> FiniteGroup:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty group file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ParseError("expected 'order N'", 1)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad order {head[1]!r}", 1)
    if n < 1:
        raise ParseError(f"bad order {n}", 1)
    if len(lines) < 1 + n:
        raise ParseError(f"expected {n} table rows", len(lines))
    table = []
    for i in range(n):
        parts = lines[1 + i].split()
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise ParseError("non-integer table entry", 2 + i)
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise ParseError(f"row must be {n} indices in 0..{n - 1}", 2 + i)
        table.append(row)
    labels = None
    rest = [ln for ln in lines[1 + n:] if ln.strip()]
    if rest:
        if rest[0].strip() != "labels":
            raise ParseError("expected 'labels' section", 2 + n)
        if len(rest) != 1 + n:
            raise ParseError(f"expected {n} labels", 2 + n)
        labels = [ln for ln in rest[1:]]
    return group_from_table(table, labels, None, name)
