"""Maximum Kummer-set search: symmetry, tables, oracle and branch and bound."""

import numpy as np
import pytest

from conftest import move, random_symplectic_map, vec
from src.application.dtos.search_dtos import SearchConfig, SearchResult, StopReason
from src.application.services.branch_and_bound import BranchAndBoundSearch, BranchExplorer, build_tasks
from src.application.services.brute_force import (
    BruteForceOracle,
    brute_force_oracle,
    enumerate_maximal_sets,
)
from src.application.services.construction import standard_basis
from src.application.services.kummer_criterion import is_kummer_set, pair_compatibility_table
from src.application.services.search_service import max_kummer_dimension, run_strategy
from src.application.services.search_tables import SearchTables
from src.application.services.symmetry import (
    OrbitStructure,
    preserves_phase,
    symmetry_representatives,
    symplectic_generators,
)
from src.common.config.app_config import SearchSettings
from src.common.exceptions.exceptions import (
    CapacityError,
    InvalidSearchConfigError,
    SearchException,
)
from src.common.utils.bitsets import mask_to_positions, positions_to_mask
from src.domain.interfaces.i_search_strategy import ISearchStrategy
from src.domain.models.algebra import AlgebraShape
from src.infrastructure.parallel.worker_pool import LocalBest

SMALL_MAXIMA = [((2, 1), 3), ((3, 1), 4), ((4, 1), 5), ((2, 2), 5)]


def exact(depth: int, **kwargs) -> SearchConfig:
    return SearchConfig(use_symmetry=depth > 0, symmetry_depth=depth, deterministic=True, **kwargs)


class TestSymmetry:
    @pytest.mark.parametrize("d, n", [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2)])
    def test_generators_are_symplectic(self, d, n):
        shape = AlgebraShape(d, n)
        assert all(preserves_phase(shape, m) for m in symplectic_generators(shape))

    def test_representatives(self, d4n1, d4n2):
        assert symmetry_representatives(d4n1) == (vec(d4n1, 1, 0), vec(d4n1, 2, 0))
        assert symmetry_representatives(d4n2) == (vec(d4n2, 1, 0, 0, 0), vec(d4n2, 2, 0, 0, 0))
        for d in (2, 3, 5):
            shape = AlgebraShape(d, 1)
            assert symmetry_representatives(shape) == (vec(shape, 1, 0),)

    def test_state_cap(self, d4n1):
        assert symmetry_representatives(d4n1, state_cap=10) is None
        orbits = OrbitStructure(d4n1, state_cap=100)
        assert orbits.representatives() == [0, 1]
        assert orbits.stabilizer_classes(0, [1, 2, 3]) is None

    def test_labels_invariant_under_random_maps(self, rng):
        shape = AlgebraShape(4, 2)
        orbits = OrbitStructure(shape)
        labels = orbits.vector_labels()
        candidates = SearchTables(shape).candidates
        for _ in range(20):
            matrix = random_symplectic_map(shape, rng)
            images = move(shape, matrix, candidates)
            moved = np.array([labels[shape.index_of(v) - 1] for v in images])
            assert (moved == labels).all()

    def test_orbit_masks_partition(self, d4n1):
        orbits = OrbitStructure(d4n1)
        masks = [orbits.orbit_mask(r) for r in orbits.representatives()]
        assert sum(len(mask_to_positions(m)) for m in masks) == 15
        assert positions_to_mask(range(15)) == masks[0] | masks[1]
        assert len(mask_to_positions(masks[1])) == 3

    def test_stabilizer_classes_partition(self, d4n1):
        orbits = OrbitStructure(d4n1)
        positions = list(range(1, 15))
        classes = orbits.stabilizer_classes(0, positions)
        union = 0
        for rep, mask in classes:
            assert rep == min(mask_to_positions(mask))
            assert not union & mask
            union |= mask
        assert union == positions_to_mask(positions)


class TestSearchTables:
    @pytest.mark.parametrize("d, n", [(3, 1), (4, 1), (2, 2)])
    def test_pair_masks_match_compatibility_table(self, d, n):
        tables = SearchTables(AlgebraShape(d, n))
        table = pair_compatibility_table(tables.shape, tables.candidates)
        for p in range(tables.count):
            expected = [q for q in range(tables.count) if q != p and table[p, q]]
            assert mask_to_positions(tables.pair[p]) == expected

    def test_extension_masks(self, d4n1, rng):
        tables = SearchTables(d4n1)
        basis = [d4n1.index_of(v) - 1 for v in standard_basis(d4n1)]
        for _ in range(40):
            size = int(rng.integers(1, len(basis)))
            chosen = sorted(int(p) for p in rng.choice(basis, size=size, replace=False))
            members, v = chosen[:-1], chosen[-1]
            compatible = tables.extension_mask(members, v)
            for m in members:
                compatible &= tables.pair[m]
            for z in range(tables.count):
                if z in chosen:
                    continue
                group = [tables.candidates[p] for p in chosen + [z]]
                assert bool(compatible >> z & 1) == (is_kummer_set(d4n1, group) is None)

    def test_coloring_classes_are_independent(self, d4n1):
        tables = SearchTables(d4n1)
        mask = positions_to_mask(range(tables.count))
        coloring = tables.greedy_coloring(mask)
        assert sorted(p for p, _ in coloring) == list(range(tables.count))
        assert [c for _, c in coloring] == sorted(c for _, c in coloring)
        for p, color in coloring:
            for q, other in coloring:
                if p != q and color == other:
                    assert not tables.pair[p] >> q & 1

    def test_tasks_without_symmetry(self, d4n1):
        tables = SearchTables(d4n1)
        tasks, depth = build_tasks(tables, 0)
        assert depth == 0
        assert [prefix for prefix, _ in tasks] == [(p,) for p in range(15)]
        for (p,), mask in tasks:
            assert not mask & ((2 << p) - 1)
            assert mask == tables.pair[p] & ~((2 << p) - 1)


class TestOracle:
    @pytest.mark.parametrize("shape_key, expected", SMALL_MAXIMA)
    def test_known_maxima(self, shape_key, expected):
        result = brute_force_oracle(AlgebraShape(*shape_key))
        assert result.max_size == expected
        assert result.complete and result.strategy == "brute_force"
        assert is_kummer_set(result.shape, result.witness) is None

    def test_capacity(self):
        with pytest.raises(CapacityError):
            brute_force_oracle(AlgebraShape(5, 2))
        with pytest.raises(CapacityError):
            enumerate_maximal_sets(AlgebraShape(2, 2))

    def test_maximal_sets_d2(self):
        shape = AlgebraShape(2, 1)
        assert enumerate_maximal_sets(shape) == [(vec(shape, 1, 0), vec(shape, 0, 1), vec(shape, 1, 1))]

    def test_maximal_sets_d4(self, d4n1):
        sets = enumerate_maximal_sets(d4n1)
        assert max(len(s) for s in sets) == 5
        assert tuple(sorted(standard_basis(d4n1), key=d4n1.index_of)) in sets
        for members in sets:
            assert is_kummer_set(d4n1, members) is None
            assert list(members) == sorted(members, key=d4n1.index_of)


class TestBranchAndBound:
    @pytest.mark.parametrize("shape_key, expected", SMALL_MAXIMA)
    @pytest.mark.parametrize("depth", [0, 1, 2])
    def test_matches_oracle_at_every_depth(self, shape_key, expected, depth):
        result = max_kummer_dimension(AlgebraShape(*shape_key), exact(depth))
        assert result.max_size == expected
        assert result.complete and result.stop_reason == StopReason.EXHAUSTED
        assert len(result.witness) == result.max_size
        assert is_kummer_set(result.shape, result.witness) is None

    def test_never_below_standard_basis(self):
        shape = AlgebraShape(2, 3)
        result = max_kummer_dimension(shape, exact(2))
        assert result.max_size == 7 and result.complete

    def test_deterministic_runs_repeat(self, d4n1):
        first = max_kummer_dimension(d4n1, exact(1))
        second = max_kummer_dimension(d4n1, exact(1))
        assert first.witness == second.witness
        assert first.explored_nodes == second.explored_nodes

    def test_worker_processes(self, d4n1):
        config = SearchConfig(use_symmetry=False, deterministic=False, max_workers=2)
        result = max_kummer_dimension(d4n1, config)
        assert result.max_size == 5 and result.complete

    def test_target_met_by_incumbent(self, d4n1):
        result = max_kummer_dimension(d4n1, exact(2, target=3))
        assert result.stop_reason == StopReason.TARGET
        assert not result.complete
        assert result.max_size >= 3

    def test_unreachable_target_exhausts(self, d4n1):
        result = max_kummer_dimension(d4n1, exact(2, target=6))
        assert result.complete and result.max_size == 5

    def test_time_budget(self, d4n2):
        result = max_kummer_dimension(d4n2, exact(0, time_budget=1e-9))
        assert result.stop_reason == StopReason.BUDGET
        assert not result.complete
        assert result.max_size == 9
        assert is_kummer_set(d4n2, result.witness) is None

    @pytest.mark.slow
    @pytest.mark.parametrize("shape_key, expected", [((4, 2), 9), ((3, 2), 7)])
    def test_two_factor_maxima(self, shape_key, expected):
        result = max_kummer_dimension(AlgebraShape(*shape_key), exact(2))
        assert result.max_size == expected and result.complete


class TestExplorationWithoutIncumbent:
    """Tasks explored from a best size of 1 must rediscover a largest set on their own."""

    @pytest.mark.parametrize("shape_key", [
        (2, 1), (3, 1), (4, 1), (2, 2), (2, 3),
        pytest.param((3, 2), marks=pytest.mark.slow),
        pytest.param((4, 2), marks=pytest.mark.slow),
    ])
    @pytest.mark.parametrize("depth", [0, 1, 2])
    def test_reaches_maximum(self, shape_key, depth):
        shape = AlgebraShape(*shape_key)
        tables = SearchTables(shape)
        orbits = OrbitStructure(shape) if depth else None
        tasks, _ = build_tasks(tables, depth, orbits)
        best = LocalBest(1)
        explorer = BranchExplorer(tables, best)
        witness = ()
        for prefix, mask in tasks:
            outcome = explorer.explore(prefix, mask)
            assert outcome.status == StopReason.EXHAUSTED
            if outcome.witness is not None and len(outcome.witness) > len(witness):
                witness = outcome.witness
        expected = shape.degree * shape.factors + 1
        assert best.get() == expected
        assert len(witness) == expected
        assert is_kummer_set(shape, [tables.candidates[p] for p in witness]) is None


class TestSearchConfig:
    @pytest.mark.parametrize("kwargs", [{"time_budget": 0}, {"time_budget": -1.0}, {"target": 0},
                                        {"max_workers": 0}, {"symmetry_depth": 3},
                                        {"progress_interval": 0}])
    def test_validation(self, kwargs):
        with pytest.raises(InvalidSearchConfigError):
            SearchConfig(**kwargs)

    def test_effective_depth(self):
        assert SearchConfig().effective_depth == 2
        assert SearchConfig(use_symmetry=False).effective_depth == 0

    def test_from_settings(self):
        settings = SearchSettings(symmetry_depth=1, time_budget=30.0)
        config = SearchConfig.from_settings(settings, time_budget=None, target=7)
        assert config.symmetry_depth == 1
        assert config.time_budget == 30.0
        assert config.target == 7

    def test_result_dict(self, d4n1):
        result = max_kummer_dimension(d4n1, exact(2))
        data = result.to_dict()
        assert isinstance(data["elapsed_ms"], int)
        assert data["max_size"] == 5 and data["d"] == 4 and data["n"] == 1
        rebuilt = SearchResult.from_dict(data)
        assert rebuilt.witness == result.witness
        assert rebuilt.stop_reason == result.stop_reason


class _Broken(ISearchStrategy):
    def __init__(self, error: Exception):
        self.error = error

    @property
    def name(self) -> str:
        return "broken"

    def run(self, shape, config=None):
        raise self.error


class TestRunStrategy:
    def test_unexpected_errors_are_wrapped(self, d4n1):
        with pytest.raises(SearchException, match="broken failed"):
            run_strategy(_Broken(ValueError("boom")), d4n1)

    def test_domain_errors_pass_through(self, d4n1):
        with pytest.raises(CapacityError):
            run_strategy(_Broken(CapacityError("too big")), d4n1)

    def test_oracle_through_service(self, d4n1):
        assert run_strategy(BruteForceOracle(), d4n1).max_size == 5
        assert BranchAndBoundSearch().name == "branch_and_bound"
