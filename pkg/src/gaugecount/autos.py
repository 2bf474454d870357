"""Endomorphisms and automorphisms of finite groups.

Automorphism enumeration searches over generator images filtered by element
order and centralizer size, builds each candidate map by breadth-first word
expansion, and verifies multiplicativity on all (element, generator) pairs,
which forces it everywhere.  The search budget caps the weighted work; an
exhausted budget marks the result incomplete rather than raising.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import (
    BadParams,
    GroupMismatch,
    InvalidGammaSet,
    NotAHomomorphism,
    NotAnAutomorphism,
    ParseError,
)
from .groups import ConjugacyClassTable, FiniteGroup, center, same_group

DEFAULT_AUT_BUDGET = 10_000_000


@dataclass(frozen=True)
class GroupEndomorphism:
    """A multiplicative self-map, stored as its full image table."""

    group: FiniteGroup
    image: tuple[int, ...]

    def apply(self, g: int) -> int:
        return self.image[g]

    def is_identity_map(self) -> bool:
        return all(self.image[g] == g for g in range(self.group.order))

    def is_constant_identity(self) -> bool:
        e = self.group.identity
        return all(v == e for v in self.image)


def is_endomorphism(G: FiniteGroup, image: Sequence[int]) -> bool:
    n = G.order
    if len(image) != n or any(not 0 <= v < n for v in image):
        return False
    for a in range(n):
        fa = image[a]
        row = G.mul_table[a]
        for b in range(n):
            if G.mul(fa, image[b]) != image[row[b]]:
                return False
    return True


def endo_from_image(G: FiniteGroup, image: Sequence[int]) -> GroupEndomorphism:
    img = tuple(image)
    if not is_endomorphism(G, img):
        raise NotAHomomorphism("image table is not multiplicative")
    return GroupEndomorphism(G, img)


def identity_endo(G: FiniteGroup) -> GroupEndomorphism:
    return GroupEndomorphism(G, tuple(range(G.order)))


def constant_identity_endo(G: FiniteGroup) -> GroupEndomorphism:
    return GroupEndomorphism(G, (G.identity,) * G.order)


def inversion_endo(G: FiniteGroup) -> GroupEndomorphism:
    """x -> x^-1; multiplicative only on abelian groups."""
    if not G.is_abelian():
        raise BadParams("inversion is not an endomorphism of a nonabelian group")
    return GroupEndomorphism(G, G.inv_table)


def inner_automorphism(G: FiniteGroup, h: int) -> GroupEndomorphism:
    if not 0 <= h < G.order:
        raise BadParams(f"element index {h} out of range")
    return GroupEndomorphism(G, tuple(G.conj(h, g) for g in range(G.order)))


def compose(outer: GroupEndomorphism, inner: GroupEndomorphism) -> GroupEndomorphism:
    if not same_group(outer.group, inner.group):
        raise GroupMismatch("endomorphisms live over different groups")
    return GroupEndomorphism(outer.group,
                             tuple(outer.image[v] for v in inner.image))


def is_automorphism(phi: GroupEndomorphism) -> bool:
    return len(set(phi.image)) == phi.group.order


def is_involutory(phi: GroupEndomorphism) -> bool:
    return all(phi.image[phi.image[g]] == g for g in range(phi.group.order))


def is_inner(phi: GroupEndomorphism) -> bool:
    G = phi.group
    return any(all(phi.image[g] == G.conj(h, g) for g in range(G.order))
               for h in range(G.order))


def is_class_inverting(phi: GroupEndomorphism, classes: ConjugacyClassTable) -> bool:
    """True when phi sends every conjugacy class to its inverse class."""
    if not same_group(phi.group, classes.group):
        raise GroupMismatch("endomorphism and class table use different groups")
    if not is_automorphism(phi):
        raise NotAnAutomorphism("class-inverting test needs a bijective map")
    co = classes.class_of
    return all(co[phi.image[r]] == classes.inverse_class[co[r]]
               for r in classes.reps)


def is_ambivalent(classes: ConjugacyClassTable) -> bool:
    return all(classes.inverse_class[c] == c for c in range(classes.n_classes))


def class_image(phi: GroupEndomorphism, classes: ConjugacyClassTable) -> tuple[int, ...]:
    """Induced map on class indices; requires an automorphism."""
    if not is_automorphism(phi):
        raise NotAnAutomorphism("class image map needs a bijective map")
    return tuple(classes.class_of[phi.image[r]] for r in classes.reps)


# ---------------------------------------------------------------------------
# automorphism enumeration

def greedy_generating_set(G: FiniteGroup) -> tuple[int, ...]:
    """Small generating set found by greedily extending the generated subgroup."""
    gens: list[int] = []
    reached = {G.identity}
    while len(reached) < G.order:
        g = next(x for x in range(G.order) if x not in reached)
        gens.append(g)
        frontier = list(reached)
        reached.add(g)
        queue = [g]
        while queue:
            x = queue.pop()
            for h in gens:
                for y in (G.mul(x, h), G.mul(h, x)):
                    if y not in reached:
                        reached.add(y)
                        queue.append(y)
            for f in frontier:
                for y in (G.mul(x, f), G.mul(f, x)):
                    if y not in reached:
                        reached.add(y)
                        queue.append(y)
    return tuple(gens)


@dataclass(frozen=True)
class AutomorphismSearch:
    """Enumerated automorphisms plus a completeness flag and work counter."""

    automorphisms: tuple[GroupEndomorphism, ...]
    complete: bool
    work: int


def _extend_generator_images(G: FiniteGroup, gens: tuple[int, ...],
                             images: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Map gens -> images extended over all of G, or None if inconsistent."""
    n = G.order
    mapping: list[int] = [-1] * n
    mapping[G.identity] = G.identity
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = G.mul(x, g)
                if mapping[y] < 0:
                    mapping[y] = G.mul(mapping[x], images[gi])
                    nxt.append(y)
        frontier = nxt
    if any(v < 0 for v in mapping):
        return None
    for gi, g in enumerate(gens):
        img = images[gi]
        for x in range(n):
            if G.mul(mapping[x], img) != mapping[G.mul(x, g)]:
                return None
    return tuple(mapping)


def enumerate_automorphisms(G: FiniteGroup,
                            budget: int = DEFAULT_AUT_BUDGET) -> AutomorphismSearch:
    """All automorphisms (deterministic order); incomplete when budget runs out."""
    n = G.order
    gens = G.generators if G.generators else greedy_generating_set(G)
    if not gens:  # trivial group
        return AutomorphismSearch((identity_endo(G),), True, 1)
    orders = [G.element_order(x) for x in range(n)]
    from .groups import centralizer_order
    cents = [centralizer_order(G, x) for x in range(n)]
    candidates = [
        tuple(x for x in range(n) if orders[x] == orders[g] and cents[x] == cents[g])
        for g in gens
    ]
    leaf_cost = n * (len(gens) + 1)
    work = 0
    complete = True
    found: list[tuple[int, ...]] = []
    for images in itertools.product(*candidates):
        if work + leaf_cost > budget:
            complete = False
            break
        work += leaf_cost
        mapping = _extend_generator_images(G, gens, images)
        if mapping is None or len(set(mapping)) != n:
            continue
        found.append(mapping)
    found.sort()
    autos = tuple(GroupEndomorphism(G, m) for m in found)
    return AutomorphismSearch(autos, complete, work)


@dataclass(frozen=True)
class AutReport:
    """Structure of the automorphism group as seen by the enumeration."""

    group_name: str
    aut_order: int
    inner_order: int
    outer_order: int
    ambivalent: bool
    quasi_ambivalent: Optional[bool]
    class_inverting_witness: Optional[GroupEndomorphism]
    charge_conjugations: tuple[GroupEndomorphism, ...]
    complete: bool


def analyze_automorphisms(G: FiniteGroup,
                          classes: ConjugacyClassTable,
                          budget: int = DEFAULT_AUT_BUDGET) -> AutReport:
    """Aut/Inn/Out orders, ambivalence, and charge-conjugation candidates.

    quasi_ambivalent is True when some involutory automorphism inverts every
    class (such a map is a charge conjugation), False when the complete
    enumeration rules one out, None when the search was truncated before
    finding one.
    """
    search = enumerate_automorphisms(G, budget)
    ambiv = is_ambivalent(classes)
    witness = None
    conjugations = []
    for phi in search.automorphisms:
        if is_class_inverting(phi, classes):
            if witness is None:
                witness = phi
            if is_involutory(phi):
                conjugations.append(phi)
    if conjugations:
        quasi: Optional[bool] = True
    elif search.complete:
        quasi = False
    else:
        quasi = None
    inner = G.order // center(G).order
    return AutReport(
        group_name=G.name,
        aut_order=len(search.automorphisms),
        inner_order=inner,
        outer_order=(len(search.automorphisms) // inner if search.complete else 0),
        ambivalent=ambiv,
        quasi_ambivalent=quasi,
        class_inverting_witness=witness,
        charge_conjugations=tuple(conjugations),
        complete=search.complete,
    )


# ---------------------------------------------------------------------------
# Hamiltonian symmetry check

def hamiltonian_symmetry_check(tau: GroupEndomorphism,
                               classes: ConjugacyClassTable,
                               couplings: Mapping[int, Fraction | int | float]) -> bool:
    """Whether the magnetic couplings are invariant under the automorphism tau.

    `couplings` maps conjugacy-class indices to real coefficients.  A valid
    coupling set must pair each class with its inverse class at the same
    coefficient (hermiticity); violations raise InvalidGammaSet.  Returns
    True when tau permutes the coupled classes preserving coefficients.
    """
    if not same_group(tau.group, classes.group):
        raise GroupMismatch("automorphism and class table use different groups")
    if not is_automorphism(tau):
        raise NotAnAutomorphism("symmetry check needs a bijective map")
    for c, h in couplings.items():
        if not 0 <= c < classes.n_classes:
            raise InvalidGammaSet(f"class index {c} out of range")
        cinv = classes.inverse_class[c]
        if cinv not in couplings:
            raise InvalidGammaSet(f"class {c} coupled but its inverse class {cinv} is not")
        if couplings[cinv] != h:
            raise InvalidGammaSet(
                f"classes {c} and {cinv} carry different coefficients")
    cmap = class_image(tau, classes)
    for c, h in couplings.items():
        ci = cmap[c]
        if ci not in couplings or couplings[ci] != h:
            return False
    return True


# ---------------------------------------------------------------------------
# text format

def endo_to_text(phi: GroupEndomorphism) -> str:
    return f"endo {phi.group.order}\n" + " ".join(map(str, phi.image)) + "\n"


def endo_from_text(text: str, G: FiniteGroup) -> GroupEndomorphism:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty endomorphism file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "endo":
        raise ParseError("expected 'endo |G|'", 1)
    try:
        order = int(head[1])
    except ValueError:
        raise ParseError("non-integer order", 1)
    if order != G.order:
        raise ParseError(f"file is for group order {order}, expected {G.order}", 1)
    tokens: list[int] = []
    for i, ln in enumerate(lines[1:]):
        for tok in ln.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ParseError("non-integer image entry", 2 + i)
    if len(tokens) != order:
        raise ParseError(f"expected {order} image entries, got {len(tokens)}", len(lines))
    if any(not 0 <= v < order for v in tokens):
        raise ParseError("image entry out of range", 2)
    return endo_from_image(G, tokens)
