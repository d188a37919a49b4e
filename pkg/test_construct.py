"""Standard basis construction and the subalgebra decompositions."""

import pytest

from conftest import chain_with_partner, even_chain, vec
from src.application.services.construction import (
    decompose_chain_with_partner,
    decompose_even_chain,
    standard_basis,
)
from src.application.services.kummer_criterion import is_kummer_set
from src.common.exceptions.exceptions import (
    InvalidChainError,
    InvalidHypothesisError,
    UnsupportedDegreeError,
)
from src.domain.models.algebra import AlgebraShape, subgroup_generated, symplectic_phase


def flatten(pairs):
    return [v for pair in pairs for v in pair]


def assert_generator_pairs(shape, pairs, last_phase=1):
    for j, (p, q) in enumerate(pairs):
        expected = last_phase if j == len(pairs) - 1 else 1
        assert symplectic_phase(shape, p, q) == expected
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            assert all(symplectic_phase(shape, a, b) == 0 for a in pairs[i] for b in pairs[j])


class TestStandardBasis:
    def test_single_factor_d4(self, d4n1):
        assert standard_basis(d4n1) == (vec(d4n1, 0, 1), vec(d4n1, 1, 1), vec(d4n1, 2, 1),
                                        vec(d4n1, 3, 1), vec(d4n1, 1, 0))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_size_and_kummer(self, d, n):
        shape = AlgebraShape(d, n)
        basis = standard_basis(shape)
        assert len(basis) == d * n + 1
        assert len(set(basis)) == len(basis)
        assert not any(v.is_zero() for v in basis)
        assert is_kummer_set(shape, basis) is None

    @pytest.mark.parametrize("d, n", [(2, 2), (3, 2), (4, 2), (5, 1)])
    def test_generates_full_group(self, d, n):
        shape = AlgebraShape(d, n)
        assert len(subgroup_generated(shape, standard_basis(shape))) == shape.group_order

    def test_recursive_layers(self, d4n2):
        basis = standard_basis(d4n2)
        inner = standard_basis(AlgebraShape(4, 1))
        assert basis[:4] == tuple(vec(d4n2, 0, 0, j, 1) for j in range(4))
        assert basis[4:] == tuple(vec(d4n2, *v.entries, 1, 0) for v in inner)


class TestEvenChain:
    def test_single_pair(self, d4n1):
        x, y = vec(d4n1, 1, 0), vec(d4n1, 0, 1)
        assert decompose_even_chain(d4n1, [x, y]) == [(x, y)]

    @pytest.mark.parametrize("d", [3, 4, 5])
    @pytest.mark.parametrize("m", [1, 2])
    def test_random_chains(self, d, m, rng):
        shape = AlgebraShape(d, 3)
        for _ in range(100):
            chain = even_chain(shape, m, rng)
            pairs = decompose_even_chain(shape, chain)
            assert len(pairs) == m
            assert_generator_pairs(shape, pairs)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_same_subgroup(self, m, rng):
        shape = AlgebraShape(4, 3)
        for _ in range(10):
            chain = even_chain(shape, m, rng)
            pairs = decompose_even_chain(shape, chain)
            assert subgroup_generated(shape, chain) == subgroup_generated(shape, flatten(pairs))

    def test_invalid_chains(self, d4n2):
        x, y = vec(d4n2, 1, 0, 0, 0), vec(d4n2, 0, 1, 0, 0)
        with pytest.raises(InvalidChainError):
            decompose_even_chain(d4n2, [])
        with pytest.raises(InvalidChainError):
            decompose_even_chain(d4n2, [x])
        with pytest.raises(InvalidChainError, match="expected 1"):
            decompose_even_chain(d4n2, [y, x])
        with pytest.raises(InvalidChainError):
            decompose_even_chain(d4n2, [x, vec(d4n2, 0, 0, 1, 0)])


class TestChainWithPartner:
    def test_single_dashed_pair(self, d4n1):
        v, w = vec(d4n1, 1, 0), vec(d4n1, 0, 2)
        assert decompose_chain_with_partner(d4n1, [v], w, 1) == [(v, w)]

    @pytest.mark.parametrize("m, r", [(1, 1), (1, 3), (2, 1), (2, 3), (2, 5)])
    def test_random_instances(self, m, r, rng):
        shape = AlgebraShape(4, 3)
        for _ in range(100):
            chain, w = chain_with_partner(shape, m, r, rng)
            pairs = decompose_chain_with_partner(shape, chain, w, r)
            assert len(pairs) == m + 1
            assert_generator_pairs(shape, pairs, last_phase=2)

    @pytest.mark.parametrize("m, r", [(1, 1), (2, 3)])
    def test_same_subgroup(self, m, r, rng):
        shape = AlgebraShape(4, 3)
        for _ in range(10):
            chain, w = chain_with_partner(shape, m, r, rng)
            pairs = decompose_chain_with_partner(shape, chain, w, r)
            assert subgroup_generated(shape, chain + [w]) == subgroup_generated(shape, flatten(pairs))

    def test_hypothesis_violations(self, rng):
        shape = AlgebraShape(4, 2)
        chain, w = chain_with_partner(shape, 1, 1, rng)
        with pytest.raises(InvalidHypothesisError, match="r must be odd"):
            decompose_chain_with_partner(shape, chain, w, 2)
        with pytest.raises(InvalidHypothesisError, match="phase"):
            decompose_chain_with_partner(shape, chain, w, 3)
        with pytest.raises(InvalidHypothesisError, match="odd chain"):
            decompose_chain_with_partner(shape, chain[:2], w, 1)
        with pytest.raises(InvalidHypothesisError, match="expected 1"):
            decompose_chain_with_partner(shape, list(reversed(chain)), w, 1)

    def test_requires_degree_four(self):
        shape = AlgebraShape(3, 1)
        with pytest.raises(UnsupportedDegreeError):
            decompose_chain_with_partner(shape, [vec(shape, 1, 0)], vec(shape, 0, 1), 1)
