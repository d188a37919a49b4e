"""Randomized property suites for the Kummer predicate and the graph layer."""

import re
from functools import lru_cache

import pytest

from conftest import move, random_symplectic_map, random_vector
from src.application.dtos.kummer_dtos import MultisetSpec
from src.application.services.construction import standard_basis
from src.application.services.graph_checks import build_graph, check_edge_trichotomy, run_core_checks
from src.application.services.kummer_criterion import (
    compositions,
    is_kummer_set,
    multiset_condition_holds,
    pair_compatibility_table,
    symmetric_coefficient,
)
from src.application.services.search_tables import SearchTables
from src.common.utils.bitsets import mask_to_positions, positions_to_mask
from src.domain.models.algebra import AlgebraShape, symplectic_phase
from src.domain.models.cyclotomic import CyclotomicInteger, gaussian_binomial
from src.domain.models.kummer_graph import EdgeLabel
from src.infrastructure.export.dot_exporter import to_dot

INSTANCES = 10_000
SHAPES = [AlgebraShape(d, n) for d in (2, 3, 4) for n in (1, 2)]

EDGE_LINE = re.compile(r'^\s+"(\S+)" -> "(\S+)"(.*);$')
NODE_LINE = re.compile(r'^\s+"(\S+)";$')


def random_shape(rng) -> AlgebraShape:
    return SHAPES[int(rng.integers(len(SHAPES)))]


def random_set(shape, rng, size):
    size = min(size, shape.group_order - 1)
    members = []
    while len(members) < size:
        v = random_vector(shape, rng)
        if v not in members:
            members.append(v)
    return members


def random_kummer_subset(shape, rng):
    """A random subset of a randomly moved standard basis."""
    basis = move(shape, random_symplectic_map(shape, rng), standard_basis(shape))
    size = int(rng.integers(2, min(len(basis), shape.degree + 2) + 1))
    return [basis[i] for i in rng.choice(len(basis), size=size, replace=False)]


def random_maximal_set(tables: SearchTables, rng):
    """Grow a Kummer set by random choices until no candidate fits."""
    members = []
    mask = positions_to_mask(range(tables.count))
    while mask:
        choices = mask_to_positions(mask)
        v = choices[int(rng.integers(len(choices)))]
        mask &= tables.extension_mask(members, v)
        members.append(v)
    return [tables.candidates[p] for p in members]


@lru_cache(maxsize=None)
def pair_binomial(d: int, d1: int, t: int) -> CyclotomicInteger:
    return gaussian_binomial(d, d1, CyclotomicInteger.root_power(d, -t))


class TestHereditary:
    def test_subsets_of_kummer_sets(self, rng):
        for trial in range(INSTANCES):
            shape = random_shape(rng)
            if trial % 2:
                members = random_kummer_subset(shape, rng)
            else:
                members = random_set(shape, rng, int(rng.integers(2, 5)))
            size = int(rng.integers(1, len(members) + 1))
            subset = [members[i] for i in rng.choice(len(members), size=size, replace=False)]
            if is_kummer_set(shape, members) is None:
                assert is_kummer_set(shape, subset) is None
            else:
                assert trial % 2 == 0


class TestPairFormula:
    def test_pairs_follow_q_binomial(self, rng):
        for _ in range(INSTANCES):
            d = int(rng.integers(2, 7))
            shape = AlgebraShape(d, int(rng.integers(1, 3)))
            u, v = random_set(shape, rng, 2)
            d1 = int(rng.integers(1, d))
            spec = MultisetSpec((u, v), (d1, d - d1))
            t = symplectic_phase(shape, u, v)
            assert symmetric_coefficient(shape, spec) == pair_binomial(d, d1, t)


class TestSymplecticInvariance:
    def test_predicate_and_coefficient(self, rng):
        for _ in range(INSTANCES):
            shape = random_shape(rng)
            size = int(rng.integers(2, min(shape.degree, 4) + 1))
            members = random_set(shape, rng, size)
            images = move(shape, random_symplectic_map(shape, rng, steps=6), members)
            before = is_kummer_set(shape, members)
            after = is_kummer_set(shape, images)
            assert (before is None) == (after is None)
            parts = compositions(shape.degree, size)
            composition = parts[int(rng.integers(len(parts)))]
            assert symmetric_coefficient(shape, MultisetSpec(tuple(members), composition)) == \
                symmetric_coefficient(shape, MultisetSpec(tuple(images), composition))


class TestListingOrder:
    def test_permuted_listing(self, rng):
        for trial in range(INSTANCES):
            shape = random_shape(rng)
            members = random_kummer_subset(shape, rng) if trial % 3 == 0 else \
                random_set(shape, rng, int(rng.integers(2, 5)))
            order = rng.permutation(len(members))
            shuffled = [members[i] for i in order]
            assert is_kummer_set(shape, members) == is_kummer_set(shape, shuffled)

            k = min(len(members), shape.degree)
            parts = compositions(shape.degree, k)
            composition = parts[int(rng.integers(len(parts)))]
            spec = MultisetSpec(tuple(members[:k]), composition)
            joint = rng.permutation(k)
            permuted = MultisetSpec(tuple(spec.elements[i] for i in joint),
                                    tuple(composition[i] for i in joint))
            assert multiset_condition_holds(shape, spec) == multiset_condition_holds(shape, permuted)


class TestGraphProperties:
    def test_labels_match_phases(self, d4n2, rng):
        for _ in range(1000):
            u, v = random_set(d4n2, rng, 2)
            graph = build_graph(d4n2, [u, v])
            assert graph.label(0, 1) is EdgeLabel.from_phase(symplectic_phase(d4n2, u, v))
            assert graph.label(1, 0) is EdgeLabel.from_phase(symplectic_phase(d4n2, v, u))

    def test_compatible_pairs_are_arrows_or_scalar_dashed(self, d4n2):
        tables = SearchTables(d4n2)
        table = pair_compatibility_table(d4n2, tables.candidates)
        for i in range(tables.count):
            for j in range(i + 1, tables.count):
                if not table[i, j]:
                    continue
                t = int(tables.phases[i, j])
                assert t in (1, 2, 3)
                if t == 2:
                    total = (tables.vectors[i] + tables.vectors[j]) * 2 % 4
                    assert not total.any()

    @pytest.mark.parametrize("n", [1, 2])
    def test_kummer_sets_pass_every_check(self, n, rng):
        shape = AlgebraShape(4, n)
        tables = SearchTables(shape)
        for _ in range(150):
            members = random_maximal_set(tables, rng)
            assert is_kummer_set(shape, members) is None
            graph = build_graph(shape, members)
            assert all(result.ok for result in run_core_checks(graph))
            assert check_edge_trichotomy(graph).ok

    def test_dot_round_trip(self, rng):
        for _ in range(200):
            shape = AlgebraShape(4, int(rng.integers(1, 3)))
            members = random_set(shape, rng, int(rng.integers(1, 7)))
            graph = build_graph(shape, members)
            lines = to_dot(graph).splitlines()
            nodes = [m.group(1) for m in map(NODE_LINE.match, lines) if m]
            assert nodes == list(graph.names)
            index = {name: i for i, name in enumerate(nodes)}
            edges = [m.groups() for m in map(EDGE_LINE.match, lines) if m]
            assert len(edges) == graph.size * (graph.size - 1) // 2
            for tail, head, attrs in edges:
                i, j = index[tail], index[head]
                if "commute" in attrs:
                    assert graph.label(i, j) is EdgeLabel.COMMUTE
                elif "dashed" in attrs:
                    assert graph.label(i, j) is EdgeLabel.DASHED
                else:
                    assert graph.label(i, j) is EdgeLabel.ARROW_TO
