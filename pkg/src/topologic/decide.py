"""Bounded decision procedures over enumerated finite models.

Validity over all topological models is decidable, but the size bound
coming from the finite-model construction grows too fast to enumerate,
so the procedures here search up to a user-supplied point bound and
report verdicts "within bound".

Topologies are enumerated through preorders (opens = up-closed sets of a
reflexive transitive relation); the raw closed-family enumeration is kept
as an independent oracle for the tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formula import And, Atom, Bot, Box, Formula, Knows, Not, Top, atoms
from .semantics import (AXIOM_METAVARS, Evaluator, Pair, find_counterexample,
                        instantiate_axiom, pairs_in_order)
from .space import (EMPTY, Model, PointSet, SpaceError, SubsetSpace,
                    make_model, make_space, set_key, sort_family)

HARD_POINT_CAP = 4


@dataclass(frozen=True)
class SearchBound:
    max_points: int
    atoms: tuple[str, ...]
    enumerate_valuations: bool = True

    def __post_init__(self) -> None:
        if self.max_points < 1:
            raise ValueError("max_points must be at least 1")


@dataclass
class Verdict:
    kind: str  # satisfiable | no_model_within_bound | valid_within_bound | invalid
    model: Model | None = None
    pair: Pair | None = None

    @property
    def positive(self) -> bool:
        return self.kind in ("satisfiable", "valid_within_bound")


def _point_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


def _subsets_in_order(n: int) -> list[PointSet]:
    universe = range(n)
    out = []
    for k in range(n + 1):
        for combo in itertools.combinations(universe, k):
            out.append(frozenset(combo))
    return out


def enumerate_topologies(n: int, cap: int = HARD_POINT_CAP
                         ) -> Iterator[SubsetSpace]:
    """Every labeled topology on n points, exactly once, in canonical order.

    Candidates are the up-set families of reflexive transitive relations,
    deduplicated across preorders that generate the same family.
    """
    if n < 1:
        raise SpaceError("need at least one point")
    if n > cap:
        raise SpaceError(f"point count {n} exceeds the cap {cap}")
    names = _point_names(n)
    subsets = _subsets_in_order(n)
    off_diagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
    families = set()
    for choice in itertools.product((False, True), repeat=len(off_diagonal)):
        rel = {(i, i) for i in range(n)}
        rel.update(e for e, picked in zip(off_diagonal, choice) if picked)
        if any((i, j) in rel and (j, k) in rel and (i, k) not in rel
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        up_sets = tuple(U for U in subsets
                        if all(j in U for i in U for (i2, j) in rel if i2 == i))
        families.add(up_sets)
    ordered = sorted(families,
                     key=lambda fam: tuple(set_key(U) for U in sort_family(fam)))
    for fam in ordered:
        yield make_space(names, fam)


def enumerate_closed_families(n: int) -> list[tuple[PointSet, ...]]:
    """Brute-force oracle: all families containing the empty set and X and
    closed under pairwise intersection and union."""
    subsets = _subsets_in_order(n)
    universe = frozenset(range(n))
    middle = [s for s in subsets if s != EMPTY and s != universe]
    out = []
    for k in range(len(middle) + 1):
        for combo in itertools.combinations(middle, k):
            fam = set(combo) | {EMPTY, universe}
            if all(a & b in fam and a | b in fam for a in fam for b in fam):
                out.append(sort_family(fam))
    return sorted(out, key=lambda fam: tuple(set_key(U) for U in fam))


def enumerate_subset_spaces(n: int, max_opens: int) -> Iterator[SubsetSpace]:
    """All subset spaces on n points with at most max_opens opens.

    Only X is required to be a member; no closure conditions."""
    names = _point_names(n)
    universe = frozenset(range(n))
    others = [s for s in _subsets_in_order(n) if s != universe]
    for k in range(min(max_opens, len(others) + 1)):
        for combo in itertools.combinations(others, k):
            yield make_space(names, set(combo) | {universe})


def enumerate_valuations(n: int, atom_names: Sequence[str]
                         ) -> Iterator[dict[str, PointSet]]:
    subsets = _subsets_in_order(n)
    for choice in itertools.product(subsets, repeat=len(atom_names)):
        yield dict(zip(atom_names, choice))


def _candidate_models(f_atoms: set[str], b: SearchBound,
                      spaces: Iterable[SubsetSpace]) -> Iterator[Model]:
    names = sorted(set(b.atoms) | f_atoms)
    for space in spaces:
        n = len(space.point_names)
        for val in enumerate_valuations(n, names):
            yield make_model(space, val)


def decide_sat(f: Formula, b: SearchBound) -> Verdict:
    """Search topological models up to the bound for a satisfying pair."""
    if not atoms(f) <= set(b.atoms):
        raise SpaceError(f"formula atoms {sorted(atoms(f))} not covered by "
                         f"the search bound atoms {list(b.atoms)}")
    for n in range(1, b.max_points + 1):
        for m in _candidate_models(atoms(f), b, enumerate_topologies(n)):
            ev = Evaluator(m)
            for p in pairs_in_order(m):
                if ev.satisfies(p, f):
                    assert Evaluator(m).satisfies(p, f)
                    return Verdict("satisfiable", m, p)
    return Verdict("no_model_within_bound")


def decide_valid(f: Formula, b: SearchBound) -> Verdict:
    """Search topological models up to the bound for a falsifying pair."""
    if not atoms(f) <= set(b.atoms):
        raise SpaceError(f"formula atoms {sorted(atoms(f))} not covered by "
                         f"the search bound atoms {list(b.atoms)}")
    for n in range(1, b.max_points + 1):
        for m in _candidate_models(atoms(f), b, enumerate_topologies(n)):
            counter = find_counterexample(m, f)
            if counter is not None:
                assert not Evaluator(m).satisfies(counter, f)
                return Verdict("invalid", m, counter)
    return Verdict("valid_within_bound")


def random_formula(rng: random.Random, atom_names: Sequence[str],
                   depth: int) -> Formula:
    """Random core-AST formula of at most the given connective depth."""
    if depth == 0 or rng.random() < 0.2:
        leaves: list[Formula] = [Atom(a) for a in atom_names] or [Top()]
        leaves += [Top(), Bot()]
        return rng.choice(leaves)
    kind = rng.choice(("not", "and", "knows", "box"))
    if kind == "and":
        return And(random_formula(rng, atom_names, depth - 1),
                   random_formula(rng, atom_names, depth - 1))
    child = random_formula(rng, atom_names, depth - 1)
    if kind == "not":
        return Not(child)
    if kind == "knows":
        return Knows(child)
    return Box(child)


@dataclass
class SchemeViolation:
    scheme_id: int
    instance: Formula
    model: Model
    pair: Pair


@dataclass
class SweepReport:
    checked: dict[int, int]
    violations: list[SchemeViolation]

    @property
    def clean(self) -> bool:
        return not self.violations


def axiom_soundness_sweep(b: SearchBound, scheme_ids: Sequence[int],
                          trials: int, seed: int,
                          spaces: Iterable[SubsetSpace] | None = None,
                          substitution_depth: int = 2) -> SweepReport:
    """Check random instances of the axiom schemes for validity over all
    enumerated topologies (or supplied spaces) up to the bound.

    Expected outcome on topologies: no violations for any of the twelve
    schemes.
    """
    rng = random.Random(seed)
    atom_names = list(b.atoms) or ["A"]
    instances: list[tuple[int, Formula]] = []
    for scheme_id in scheme_ids:
        for _ in range(trials):
            subst: dict[str, Formula] = {}
            for var in AXIOM_METAVARS[scheme_id]:
                if scheme_id == 2:
                    subst[var] = Atom(rng.choice(atom_names))
                else:
                    subst[var] = random_formula(rng, atom_names,
                                                substitution_depth)
            instances.append((scheme_id, instantiate_axiom(scheme_id, subst)))
    if spaces is None:
        spaces = [s for n in range(1, b.max_points + 1)
                  for s in enumerate_topologies(n)]
    else:
        spaces = list(spaces)
    checked = {sid: 0 for sid in scheme_ids}
    violations: list[SchemeViolation] = []
    for space in spaces:
        n = len(space.point_names)
        for val in enumerate_valuations(n, atom_names):
            m = make_model(space, val)
            ev = Evaluator(m)
            for scheme_id, instance in instances:
                checked[scheme_id] += 1
                counter = find_counterexample(m, instance, ev)
                if counter is not None:
                    violations.append(
                        SchemeViolation(scheme_id, instance, m, counter))
    return SweepReport(checked, violations)


# Curated substitutions for the boundary search: the schemes beyond the
# subset-space axiomatization need a non-atomic operand to fail, since for
# atomic A the effort modality collapses ([]A is equivalent to A).
_BOUNDARY_SUBSTITUTIONS: dict[int, list[dict[str, Formula]]] = {
    11: [{"phi": Knows(Atom("A"))},
         {"phi": Not(Knows(Atom("A")))},
         {"phi": Not(Knows(Not(Atom("A"))))}],
    12: [{"phi": Atom("A"), "psi": Atom("B"), "chi": Atom("C")},
         {"phi": Knows(Atom("A")), "psi": Atom("B"), "chi": Atom("C")},
         {"phi": Not(Knows(Not(Atom("A")))), "psi": Atom("B"),
          "chi": Atom("C")}],
}


def find_subset_space_countermodel(scheme_id: int, b: SearchBound,
                                   max_opens: int = 4
                                   ) -> tuple[Model, Formula, Pair] | None:
    """Search non-topological subset spaces for a falsifying instance of
    scheme 11 or 12.  Returns the least hit in the deterministic order
    (points, space, substitution, valuation), or None within the bound."""
    if scheme_id not in (11, 12):
        raise SpaceError("boundary search applies to schemes 11 and 12 only")
    for n in range(1, b.max_points + 1):
        for space in enumerate_subset_spaces(n, max_opens):
            for subst in _BOUNDARY_SUBSTITUTIONS[scheme_id]:
                instance = instantiate_axiom(scheme_id, subst)
                names = sorted(atoms(instance))
                for val in enumerate_valuations(n, names):
                    m = make_model(space, val)
                    counter = find_counterexample(m, instance)
                    if counter is not None:
                        assert not Evaluator(m).satisfies(counter, instance)
                        return m, instance, counter
    return None
