"""Exact dimension counting for gauge-invariant Hilbert spaces.

The engine averages the gauge projector over conjugacy classes: on a lattice
whose untwisted links connect all constrained sites, every site
transformation is forced into a single conjugacy class C, and the dimension
collapses to an exact class sum

    dim = f_free * sum_C (|G|/|C|)^(E - V_bulk) * alpha(C)^|dX|
              * prod_(bulk sites) chi_x(C) * vacuum(C)

with all arithmetic over exact cyclotomic numbers.  Twisted links route the
head-site factor of a gauge transformation through an endomorphism phi:

* phi = identity map: the link behaves as untwisted and is normalized away.
* phi = constant identity (a sink link): the link forces its tail to the
  identity, restricting the sum to the identity class, and leaves its head
  unconstrained.  Sites all of whose incidences are sink-link heads are
  "free": they decouple and contribute f_free factors (1/|G|) sum_g chi(g).
* any other endomorphism: each head site x of a twisted link keeps only the
  fraction alpha(C) = #{g in C : phi(g) in C} / |C| of its class choices;
  dX is the set of such head sites.  For automorphisms alpha is 0 or 1.

The result must come out a nonnegative integer; anything else raises
NonIntegralResult with the failed witness attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .cyclo import Cyclotomic
from .errors import (
    BadParams,
    BulkDisconnected,
    GroupMismatch,
    NonIntegralResult,
    OddSitesForStaggered,
)
from .groups import ConjugacyClassTable, FiniteGroup, conjugacy_classes, same_group
from .lattice import LatticeGraph, TwistSpec, connected_components, dangling_boundary_extension
from .matter import (
    ClassFunction,
    FermionMatter,
    MatterSpec,
    OneDimRep,
    PureGauge,
    ScalarMatter,
    ScalarMatterPerSite,
    constant_class_function,
    det_character,
    fermion_site_character,
    fixed_point_character,
    one_dim_class_values,
    zn_charge_rep,
)


def _cpow(base: Cyclotomic, k: int) -> Cyclotomic:
    if k < 0:
        raise BadParams("negative powers of class-function values are not used")
    out = Cyclotomic.one()
    b = base
    while k:
        if k & 1:
            out = out * b
        b = b * b
        k >>= 1
    return out


@dataclass(frozen=True)
class IntegralityWitness:
    """Evidence that the exact class sum reduced to a nonnegative integer."""

    ring_order: int
    is_rational: bool
    denominator: int
    nonnegative: bool

    @property
    def passed(self) -> bool:
        return self.is_rational and self.denominator == 1 and self.nonnegative


@dataclass(frozen=True)
class CountReport:
    """Exact count with its per-class breakdown and the integrality witness."""

    total: int
    group_name: str
    lattice_name: str
    site_count: int
    edge_count: int
    bulk_site_count: int
    free_sites: tuple[int, ...]
    twist_kind: str  # "none" | "sink" | "proper"
    twisted_head_count: int
    class_sizes: tuple[int, ...]
    per_class: tuple[Cyclotomic, ...]
    alpha: Optional[tuple[Fraction, ...]]
    free_factor: Cyclotomic
    witness: IntegralityWitness
    warnings: tuple[str, ...]


def _classify_twist(L: LatticeGraph, twist: Optional[TwistSpec]) -> tuple[str, frozenset[int]]:
    if twist is None or not twist.edges:
        return "none", frozenset()
    phi = twist.endo
    if phi.is_identity_map():
        return "none", frozenset()
    if phi.is_constant_identity():
        return "sink", twist.edges
    return "proper", twist.edges


def count_general(G: FiniteGroup,
                  classes: ConjugacyClassTable,
                  L: LatticeGraph,
                  site_chars: Union[ClassFunction, Sequence[ClassFunction]],
                  vacuum_char: Optional[ClassFunction] = None,
                  twist: Optional[TwistSpec] = None,
                  require_nonnegative: bool = True) -> CountReport:
    """Exact gauge-invariant dimension for arbitrary per-site characters.

    require_nonnegative=False admits signed totals; parity-weighted traces
    are differences of dimensions and may legitimately be negative.
    """
    if not same_group(G, classes.group):
        raise GroupMismatch("group and class table disagree")
    if twist is not None and not same_group(twist.endo.group, G):
        raise GroupMismatch("twist endomorphism lives over a different group")
    V, E = L.site_count, L.edge_count
    if isinstance(site_chars, ClassFunction):
        chars: list[ClassFunction] = [site_chars] * V
    else:
        chars = list(site_chars)
        if len(chars) != V:
            raise BadParams(f"{len(chars)} site characters for {V} sites")
    for ch in chars:
        if not same_group(ch.group, G):
            raise GroupMismatch("site character lives over a different group")
    if vacuum_char is not None and not same_group(vacuum_char.group, G):
        raise GroupMismatch("vacuum character lives over a different group")

    warnings: list[str] = []
    kind, twisted = _classify_twist(L, twist)
    if twist is not None and twist.edges and kind == "none":
        warnings.append("identity twist normalized to untwisted links")
    for i in sorted(twisted):
        t, h = L.edges[i]
        if t == h:
            warnings.append(f"twisted link {i} is a self-loop")

    # incidence roles per site over twisted links and untwisted links
    untwisted_touch = [False] * V
    sink_tail = [False] * V
    head_sites: set[int] = set()
    touched = [False] * V
    for i, (t, h) in enumerate(L.edges):
        touched[t] = touched[h] = True
        if i in twisted:
            if kind == "sink":
                sink_tail[t] = True
            else:
                head_sites.add(h)
        else:
            untwisted_touch[t] = untwisted_touch[h] = True

    free: list[int] = []
    for x in range(V):
        if not touched[x]:
            free.append(x)  # isolated site: unconstrained
        elif kind == "sink" and not untwisted_touch[x] and not sink_tail[x]:
            free.append(x)  # every incidence is a sink-link head
    free_set = set(free)
    bulk = [x for x in range(V) if x not in free_set]
    n_bulk = len(bulk)

    if n_bulk > 1:
        untwisted_edges = [L.edges[i] for i in range(E) if i not in twisted]
        comps = connected_components(V, untwisted_edges)
        bulk_comps = {next(iter(c for c in range(len(comps)) if x in comps[c]))
                      for x in bulk}
        if len(bulk_comps) > 1:
            raise BulkDisconnected(
                f"constrained sites span {len(bulk_comps)} untwisted components; "
                "the class-sum reduction needs exactly one")

    n_cls = classes.n_classes
    id_class = classes.class_of[G.identity]

    alpha: Optional[tuple[Fraction, ...]] = None
    if kind == "proper":
        phi = twist.endo
        avals = []
        for c in range(n_cls):
            hits = sum(1 for g in classes.members(c)
                       if classes.class_of[phi.image[g]] == c)
            avals.append(Fraction(hits, classes.sizes[c]))
        alpha = tuple(avals)

    # class-independent factor from free sites
    free_factor = Cyclotomic.one()
    for x in free:
        total_x = Cyclotomic.zero()
        for c in range(n_cls):
            total_x = total_x + classes.sizes[c] * chars[x].values[c]
        free_factor = free_factor * (Fraction(1, G.order) * total_x)

    per_class: list[Cyclotomic] = []
    zero = Cyclotomic.zero()
    for c in range(n_cls):
        if kind == "sink" and c != id_class and n_bulk > 0:
            per_class.append(zero)
            continue
        scale = Fraction(G.order, classes.sizes[c]) ** (E - n_bulk)
        if alpha is not None:
            a = alpha[c] ** len(head_sites)
            if a == 0:
                per_class.append(zero)
                continue
            scale *= a
        if n_bulk == 0:
            per_class.append(zero)
            continue
        term = Cyclotomic.rational(scale)
        if vacuum_char is not None:
            term = term * vacuum_char.values[c]
        for x in bulk:
            v = chars[x].values[c]
            if v.is_zero():
                term = zero
                break
            term = term * v
        per_class.append(term)

    total_cyc = zero
    for t in per_class:
        total_cyc = total_cyc + t
    total_cyc = free_factor * total_cyc
    if n_bulk == 0:
        # nothing but free sites (or the empty lattice): only their factor remains
        total_cyc = free_factor

    rational = total_cyc.is_rational()
    denom = total_cyc.rational_value().denominator if rational else 0
    nonneg = rational and total_cyc.rational_value() >= 0
    witness = IntegralityWitness(total_cyc.order, rational, denom, nonneg)
    if not (rational and denom == 1) or (require_nonnegative and not nonneg):
        raise NonIntegralResult(
            f"class sum is not a nonnegative integer: ring order {witness.ring_order}, "
            f"rational={witness.is_rational}, denominator={witness.denominator}, "
            f"nonnegative={witness.nonnegative}")
    total = int(total_cyc.rational_value())

    return CountReport(
        total=total,
        group_name=G.name,
        lattice_name=L.name,
        site_count=V,
        edge_count=E,
        bulk_site_count=n_bulk,
        free_sites=tuple(free),
        twist_kind=kind,
        twisted_head_count=len(head_sites),
        class_sizes=classes.sizes,
        per_class=tuple(per_class),
        alpha=alpha,
        free_factor=free_factor,
        witness=witness,
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# matter-specific entry points

def count_pure_gauge(G: FiniteGroup, L: LatticeGraph,
                     twist: Optional[TwistSpec] = None,
                     classes: Optional[ConjugacyClassTable] = None) -> CountReport:
    cls = classes or conjugacy_classes(G)
    return count_general(G, cls, L, constant_class_function(cls, 1), twist=twist)


def count_scalar(G: FiniteGroup, L: LatticeGraph, matter: ScalarMatter,
                 twist: Optional[TwistSpec] = None,
                 classes: Optional[ConjugacyClassTable] = None) -> CountReport:
    cls = classes or conjugacy_classes(G)
    chi = fixed_point_character(matter.action, cls)
    return count_general(G, cls, L, chi, twist=twist)


def count_scalar_per_site(G: FiniteGroup, L: LatticeGraph,
                          matter: ScalarMatterPerSite,
                          twist: Optional[TwistSpec] = None,
                          classes: Optional[ConjugacyClassTable] = None) -> CountReport:
    cls = classes or conjugacy_classes(G)
    chars = [fixed_point_character(a, cls) for a in matter.actions]
    return count_general(G, cls, L, chars, twist=twist)


def fermion_sector_character(matter: FermionMatter, classes: ConjugacyClassTable,
                             sign: int = 1) -> ClassFunction:
    """Per-site Fock character prod_f det(1 + sign rho_f)^spinor_count."""
    total = constant_class_function(classes, 1)
    for rep in matter.flavours:
        chi = fermion_site_character(rep, classes, sign=sign)
        vals = tuple(_cpow(v, matter.spinor_count) for v in chi.values)
        total = ClassFunction(classes.group,
                              tuple(a * b for a, b in zip(total.values, vals)))
    return total


def staggered_vacuum_character(matter: FermionMatter, classes: ConjugacyClassTable,
                               n_sites: int) -> ClassFunction:
    """Vacuum weight prod_f det(rho_f(C^-1))^(spinor_count * V / 2).

    The staggered vacuum fills every mode on alternating sites; the filled
    sites contribute the determinant character of the inverse class.  Only
    the number of filled sites (V/2, whence even V) enters, because the
    determinant of a representation is a class function.
    """
    if n_sites % 2 != 0:
        raise OddSitesForStaggered(
            f"staggered vacuum needs an even site count, got {n_sites}")
    power = matter.spinor_count * (n_sites // 2)
    total = constant_class_function(classes, 1)
    for rep in matter.flavours:
        dchi = det_character(rep, classes, inverse=True)
        vals = tuple(_cpow(v, power) for v in dchi.values)
        total = ClassFunction(classes.group,
                              tuple(a * b for a, b in zip(total.values, vals)))
    return total


def fermion_site_characters(matter: FermionMatter, classes: ConjugacyClassTable,
                            n_sites: int, sign: int = 1) -> list[ClassFunction]:
    """Per-site Fock characters with the vacuum weight folded into each site.

    A one-dimensional background vacuum multiplies every site; the staggered
    vacuum fills every mode on odd-indexed sites only, so exactly those sites
    pick up the factor prod_f det(rho_f(C^-1))^spinor_count.  Folding the
    weight per site (rather than as one global factor) keeps the count right
    even when some sites decouple from the class sum.
    """
    base = fermion_sector_character(matter, classes, sign=sign)

    def dress(extra: ClassFunction) -> ClassFunction:
        return ClassFunction(classes.group,
                             tuple(a * b for a, b in zip(base.values, extra.values)))

    if isinstance(matter.vacuum, OneDimRep):
        return [dress(one_dim_class_values(matter.vacuum, classes))] * n_sites
    if matter.vacuum == "staggered":
        if n_sites % 2 != 0:
            raise OddSitesForStaggered(
                f"staggered vacuum needs an even site count, got {n_sites}")
        sigma = constant_class_function(classes, 1)
        for rep in matter.flavours:
            dchi = det_character(rep, classes, inverse=True)
            vals = tuple(_cpow(v, matter.spinor_count) for v in dchi.values)
            sigma = ClassFunction(classes.group,
                                  tuple(a * b for a, b in zip(sigma.values, vals)))
        filled = dress(sigma)
        return [filled if x % 2 else base for x in range(n_sites)]
    return [base] * n_sites


def count_fermion(G: FiniteGroup, L: LatticeGraph, matter: FermionMatter,
                  twist: Optional[TwistSpec] = None,
                  classes: Optional[ConjugacyClassTable] = None,
                  parity_sign: int = 1) -> CountReport:
    """Fock-space dimension count; parity_sign=-1 weights by fermion parity."""
    cls = classes or conjugacy_classes(G)
    chars = fermion_site_characters(matter, cls, L.site_count, sign=parity_sign)
    return count_general(G, cls, L, chars, twist=twist,
                         require_nonnegative=(parity_sign == 1))


@dataclass(frozen=True)
class ParitySplit:
    """Dimensions of the even and odd fermion-parity sectors."""

    dim_even: int
    dim_odd: int
    trace_plain: int
    trace_weighted: int


def count_fermion_parity_split(G: FiniteGroup, L: LatticeGraph,
                               matter: FermionMatter,
                               twist: Optional[TwistSpec] = None,
                               classes: Optional[ConjugacyClassTable] = None) -> ParitySplit:
    cls = classes or conjugacy_classes(G)
    t_plus = count_fermion(G, L, matter, twist=twist, classes=cls, parity_sign=1).total
    t_minus = count_fermion(G, L, matter, twist=twist, classes=cls, parity_sign=-1).total
    if (t_plus + t_minus) % 2 or (t_plus - t_minus) % 2 or t_plus < abs(t_minus):
        raise NonIntegralResult(
            f"parity split is not a pair of nonnegative integers: "
            f"traces {t_plus}, {t_minus}")
    return ParitySplit((t_plus + t_minus) // 2, (t_plus - t_minus) // 2,
                       t_plus, t_minus)


def count(G: FiniteGroup, L: LatticeGraph, matter: MatterSpec,
          twist: Optional[TwistSpec] = None,
          dangling_attach: Optional[Sequence[int]] = None,
          classes: Optional[ConjugacyClassTable] = None) -> CountReport:
    """Dispatch on the matter specification.

    dangling_attach extends the lattice by one unconstrained virtual site fed
    by sink links from the listed sites; it cannot be combined with an
    explicit twist.  Matter always lives on the physical sites only.
    """
    cls = classes or conjugacy_classes(G)
    n_phys = L.site_count
    if dangling_attach is not None:
        if twist is not None:
            raise BadParams("dangling boundary and explicit twist are exclusive")
        L, twist = dangling_boundary_extension(L, tuple(dangling_attach), G)

    def pad(chars: list[ClassFunction]) -> list[ClassFunction]:
        if L.site_count > n_phys:
            chars = chars + [constant_class_function(cls, 1)] * (L.site_count - n_phys)
        return chars

    if isinstance(matter, PureGauge):
        return count_general(G, cls, L, pad([constant_class_function(cls, 1)] * n_phys),
                             twist=twist)
    if isinstance(matter, ScalarMatter):
        chi = fixed_point_character(matter.action, cls)
        return count_general(G, cls, L, pad([chi] * n_phys), twist=twist)
    if isinstance(matter, ScalarMatterPerSite):
        if len(matter.actions) != n_phys:
            raise BadParams(
                f"{len(matter.actions)} actions for {n_phys} physical sites")
        chars = [fixed_point_character(a, cls) for a in matter.actions]
        return count_general(G, cls, L, pad(chars), twist=twist)
    if isinstance(matter, FermionMatter):
        chars = fermion_site_characters(matter, cls, n_phys, sign=1)
        return count_general(G, cls, L, pad(chars), twist=twist)
    raise BadParams(f"unknown matter specification {matter!r}")


def total_hilbert_dim(G: FiniteGroup, L: LatticeGraph, matter: MatterSpec) -> int:
    """Dimension of the full unconstrained space (links times site spaces)."""
    dim = G.order ** L.edge_count
    if isinstance(matter, ScalarMatter):
        dim *= matter.action.set_size ** L.site_count
    elif isinstance(matter, ScalarMatterPerSite):
        for a in matter.actions:
            dim *= a.set_size
    elif isinstance(matter, FermionMatter):
        modes = matter.spinor_count * sum(f.dim for f in matter.flavours)
        dim *= (2 ** modes) ** L.site_count
    return dim


# ---------------------------------------------------------------------------
# cyclic-group closed forms

def zn_site_characters(N: int, charges: Sequence[int],
                       classes: ConjugacyClassTable) -> list[ClassFunction]:
    """Background charge characters chi_x(k) = omega^(q_x k) for Z_N."""
    G = classes.group
    return [one_dim_class_values(zn_charge_rep(G, q % N), classes) for q in charges]


def count_zn_closed_form(N: int, charges: Sequence[int], L: LatticeGraph,
                         boundary: str = "periodic") -> int:
    """Closed-form count for Z_N gauge theory with background charges.

    boundary = "periodic": untwisted; the count is N^(E-V+1) when the total
    charge vanishes mod N and zero otherwise.  boundary = "dangling": the
    lattice must already carry the virtual site as its last site (as built by
    the dangling extension), with sink links included in E; the Gauss
    constraint disappears and the count is N^(E-V+1) for every total charge,
    the physical site count being V-1.  boundary = "cperiodic":
    charge-conjugation (inversion) twisted wraps; odd N keeps only the zero
    class, even N also the half-period class, giving N^(E-V) and
    N^(E-V)(1+(-1)^Q) respectively.
    """
    if N < 1:
        raise BadParams(f"cyclic order must be positive, got {N}")
    V, E = L.site_count, L.edge_count
    Q = sum(charges)
    if boundary == "periodic":
        if len(charges) != V:
            raise BadParams(f"{len(charges)} charges for {V} sites")
        return N ** (E - V + 1) if Q % N == 0 else 0
    if boundary == "dangling":
        if V < 2:
            raise BadParams("dangling closed form needs the extended lattice")
        if len(charges) != V - 1:
            raise BadParams(f"{len(charges)} charges for {V - 1} physical sites")
        return N ** (E - (V - 1))
    if boundary == "cperiodic":
        if len(charges) != V:
            raise BadParams(f"{len(charges)} charges for {V} sites")
        if N % 2 == 1:
            return N ** (E - V)
        return N ** (E - V) * (1 + (-1) ** (Q % 2))
    raise BadParams(f"unknown boundary kind {boundary!r}")
