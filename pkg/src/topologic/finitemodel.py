"""Basis-model equivalence and finite-model extraction by double quotient.

A union-closed basis of a finite topology supports the same satisfaction
relation as the full topology.  Independently, quotienting the points by
open-membership plus atom profiles preserves satisfaction.  Combining a
restriction to the stable splitting of a formula with the point quotient
extracts a finite model equivalent for that formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .formula import Formula, atoms
from .semantics import Evaluator, Pair, model_valid
from .space import (EMPTY, Model, PointSet, SpaceError, close_under_union,
                    is_topology, make_model, make_space, sort_family)
from .splitting import build_splitting


def _check_basis(m: Model, basis: Sequence[PointSet]) -> None:
    opens = set(m.space.opens)
    fam = set(basis)
    for B in fam:
        if B not in opens:
            raise SpaceError(f"basis member {sorted(B)} is not open")
    for a in fam:
        for b in fam:
            if a | b not in fam:
                raise SpaceError("basis is not closed under union")
    for U in opens:
        if U and frozenset().union(*[B for B in fam if B <= U] or [EMPTY]) != U:
            raise SpaceError(f"basis does not generate the open {sorted(U)}")


def basis_witness(m: Model, basis: Sequence[PointSet], F: Iterable[PointSet],
                  V: PointSet, x: int) -> PointSet:
    """A basis member U with x in U, U below V and U in the remainder of V.

    Built as in the underlying existence argument: a basic neighborhood of
    x inside V, joined with one basic set per family member that fails to
    contain V, hitting the difference.
    """
    _check_basis(m, basis)
    fam = sort_family(F)
    if V not in fam:
        raise SpaceError("V must belong to the family")
    if x not in V:
        raise SpaceError("x must belong to V")
    sorted_basis = sort_family(basis)

    def basic_neighborhood(point: int, inside: PointSet) -> PointSet:
        for B in sorted_basis:
            if point in B and B <= inside:
                return B
        raise SpaceError("basis does not generate the topology")

    witness = basic_neighborhood(x, V)
    for Vi in fam:
        if not V <= Vi:
            xi = min(V - Vi)
            witness |= basic_neighborhood(xi, V)
    # Direct remainder membership: below V, below no family member that
    # fails to contain V.
    assert x in witness and witness <= V
    assert not any(witness <= Vi for Vi in fam if not V <= Vi)
    assert witness in sorted_basis
    return witness


@dataclass
class BasisCounterexample:
    formula: Formula
    pair: Pair | None  # None means whole-model validity disagreed


def basis_model(m: Model, basis: Sequence[PointSet]) -> Model:
    """The model over the same points whose opens are the basis members."""
    return make_model(make_space(m.space.point_names, basis), dict(m.valuation))


def basis_equivalent(m: Model, basis: Sequence[PointSet],
                     formulas: Iterable[Formula]
                     ) -> BasisCounterexample | None:
    """Check pointwise and whole-model agreement between the topology model
    and its basis model on the given formulas.

    Returns None when everything agrees (the expected outcome) or the
    first disagreement found.
    """
    _check_basis(m, basis)
    mb = basis_model(m, basis)
    ev_t = Evaluator(m)
    ev_b = Evaluator(mb)
    for f in formulas:
        for U in mb.space.opens:
            for x in sorted(U):
                p = Pair(x, U)
                if ev_t.satisfies(p, f) != ev_b.satisfies(p, f):
                    return BasisCounterexample(f, p)
        if model_valid(m, f, ev_t) != model_valid(mb, f, ev_b):
            return BasisCounterexample(f, None)
    return None


def minimal_neighborhood_basis(m: Model) -> tuple[PointSet, ...]:
    """Union closure of the minimal open neighborhoods of all points."""
    s = m.space
    seeds = []
    for x in s.universe:
        nbhd = s.universe
        for U in s.opens:
            if x in U:
                nbhd &= U
        seeds.append(nbhd)
    return close_under_union(seeds)


@dataclass
class QuotientMap:
    """Point and open classes of a membership-profile quotient."""

    source: Model
    point_class: dict[int, int]
    open_class: dict[PointSet, PointSet]
    model: Model

    def translate(self, p: Pair) -> Pair:
        return Pair(self.point_class[p.point], self.open_class[p.open])


def point_quotient(m: Model, atom_list: Iterable[str]) -> QuotientMap:
    """Quotient the points by (open membership, atom membership) profiles.

    The quotient space carries the image opens and the image valuation;
    when the source is a topology the image is asserted to be one too.
    """
    names = tuple(sorted(set(atom_list)))
    s = m.space
    profiles: dict[tuple, int] = {}
    point_class: dict[int, int] = {}
    class_members: list[list[int]] = []
    for x in sorted(s.universe):
        profile = (tuple(x in U for U in s.opens),
                   tuple(x in m.atom_set(a) for a in names))
        if profile not in profiles:
            profiles[profile] = len(class_members)
            class_members.append([])
        point_class[x] = profiles[profile]
        class_members[profiles[profile]].append(x)
    open_class = {U: frozenset(point_class[x] for x in U) for U in s.opens}
    class_names = tuple(f"c{i}" for i in range(len(class_members)))
    qspace = make_space(class_names, set(open_class.values()))
    qval = {a: frozenset(point_class[x] for x in m.atom_set(a)) for a in names}
    # Well-definedness: class members agree on every atom by construction.
    for a in names:
        for members in class_members:
            assert len({x in m.atom_set(a) for x in members}) == 1
    if is_topology(s):
        assert is_topology(qspace), "quotient of a topology must be a topology"
    return QuotientMap(m, point_class, open_class, make_model(qspace, qval))


@dataclass
class ExtractionResult:
    """Finite model extracted for a formula, with the translation back."""

    restricted_family: tuple[PointSet, ...]
    restricted_model: Model
    quotient: QuotientMap
    model: Model
    translate: Callable[[Pair], Pair]


def extract_finite_model(m: Model, f: Formula) -> ExtractionResult:
    """Restrict the opens to the stable splitting of f, topologize by
    union closure, then quotient the points.

    Satisfaction of every subformula of f is preserved at every pair whose
    open survives the restriction.
    """
    if not is_topology(m.space):
        raise SpaceError("extract_finite_model requires a topology")
    table = build_splitting(m, f)
    family = set(table.splittings[f].family)
    family.add(EMPTY)
    closed = set(close_under_union(family))
    # Union closure of an intersection-closed family of opens stays
    # intersection-closed (the open-set lattice is distributive).
    assert all(a & b in closed for a in closed for b in closed)
    names = atoms(f)
    restricted_space = make_space(m.space.point_names, closed)
    restricted = make_model(restricted_space,
                            {a: m.atom_set(a) for a in names})
    qm = point_quotient(restricted, names)
    return ExtractionResult(sort_family(closed), restricted, qm, qm.model,
                            qm.translate)
