"""Tests for compatible pairs and seed mutation."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import annulus, hexagon, pentagon, seed_choices
from snakeq import (
    LambdaForm,
    Seed,
    SeedError,
    check_compatible,
    mutate_B,
    mutate_Lambda,
    mutate_seed,
    mutate_tropical,
    principal_lambda,
    principal_seed,
    signed_adjacency,
)

KRONECKER = ((0, 2), (-2, 0), (1, 0), (0, 1))


# ----------------------------------------------------------------------
# compatibility

def test_principal_seed_has_scalar_one():
    seed = principal_seed(signed_adjacency(annulus()))
    assert seed.d == 1
    assert seed.m == 4 and seed.n == 2


def test_principal_lambda_blocks():
    b = [[0, -1], [1, 0]]
    lam = principal_lambda(b)
    assert lam.rows == (
        (0, 0, -1, 0),
        (0, 0, 0, -1),
        (1, 0, 0, 1),
        (0, 1, -1, 0),
    )


def test_doubling_lambda_doubles_the_scalar():
    b = signed_adjacency(pentagon())
    seed = principal_seed(b)
    doubled = LambdaForm([[2 * v for v in row] for row in seed.lam.rows])
    assert check_compatible(seed.btilde, doubled) == 2


def test_incompatible_pair_is_rejected():
    with pytest.raises(SeedError):
        check_compatible(KRONECKER, principal_lambda([[0, -1], [1, 0]]))


def test_negative_scalar_is_rejected():
    btilde = ((0,), (1,))
    lam = LambdaForm([[0, 1], [-1, 0]])
    with pytest.raises(SeedError):
        check_compatible(btilde, lam)


def test_non_uniform_diagonal_is_rejected():
    btilde = ((0, 0), (0, 0), (1, 0), (0, 2))
    lam = LambdaForm(
        [
            [0, 0, -1, 0],
            [0, 0, 0, -1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ]
    )
    with pytest.raises(SeedError):
        check_compatible(btilde, lam)


def test_seed_from_dict_round_trip():
    seed = principal_seed(signed_adjacency(hexagon()))
    assert Seed.from_dict(seed.to_dict()) == seed


def test_seed_from_dict_rejects_broken_lambda():
    seed = principal_seed(signed_adjacency(annulus()))
    data = seed.to_dict()
    data["Lambda"][0][1] += 1
    with pytest.raises(SeedError):
        Seed.from_dict(data)


def test_seed_from_dict_rejects_missing_keys():
    with pytest.raises(SeedError):
        Seed.from_dict({"Btilde": [[0]]})


# ----------------------------------------------------------------------
# matrix mutation

def test_kronecker_mutation_frozen_values():
    assert mutate_B(KRONECKER, 0) == (
        (0, -2),
        (2, 0),
        (-1, 2),
        (0, 1),
    )


matrices = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2),
        min_size=n,
        max_size=n,
    )
)


@given(matrices, st.integers(min_value=0, max_value=1))
def test_matrix_mutation_is_an_involution(rows, k):
    b = tuple(tuple(r) for r in rows)
    assert mutate_B(mutate_B(b, k), k) == b


def test_mutation_direction_must_be_mutable():
    with pytest.raises(SeedError):
        mutate_B(KRONECKER, 2)


# ----------------------------------------------------------------------
# seed mutation

@given(st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=6))
def test_seed_mutation_keeps_the_scalar(path):
    for seed in seed_choices(annulus()):
        d = seed.d
        current = seed
        for k in path:
            current = mutate_seed(current, k)
        assert current.d == d


def test_seed_mutation_is_an_involution():
    for t in (pentagon(), annulus(), hexagon()):
        for seed in seed_choices(t):
            for k in range(seed.n):
                back = mutate_seed(mutate_seed(seed, k), k)
                assert back.btilde == seed.btilde
                assert back.lam == seed.lam


def test_lambda_mutation_ignores_the_mutated_column_sign():
    # compatibility makes the form pair trivially with the mutated column,
    # so mutating the form before or after the matrix gives the same result
    for t in (pentagon(), annulus(), hexagon()):
        for seed in seed_choices(t):
            for k in range(seed.n):
                before = mutate_Lambda(seed.lam, seed.btilde, k)
                after = mutate_Lambda(seed.lam, mutate_B(seed.btilde, k), k)
                assert before == after


def test_hexagon_form_mutation_frozen_value():
    seed = principal_seed(signed_adjacency(hexagon()))
    assert mutate_Lambda(seed.lam, seed.btilde, 1).rows == (
        (0, 0, 0, -1, 0, 0),
        (0, 0, 0, -1, 1, 0),
        (0, 0, 0, 0, 0, -1),
        (1, 1, 0, 0, 1, 0),
        (0, -1, 0, -1, 0, 1),
        (0, 0, 1, 0, -1, 0),
    )


# ----------------------------------------------------------------------
# tropical dynamics

@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=8))
def test_tropical_dynamics_tracks_the_frozen_rows(path):
    """Bottom rows of a mutated principal matrix obey the tropical recurrence."""
    seed = principal_seed(signed_adjacency(hexagon()))
    n = seed.n
    btilde = seed.btilde
    ys = tuple(
        tuple(btilde[n + i][j] for i in range(n)) for j in range(n)
    )
    for k in path:
        ys = mutate_tropical(ys, tuple(r[:n] for r in btilde[:n]), k)
        btilde = mutate_B(btilde, k)
    for j in range(n):
        assert ys[j] == tuple(btilde[n + i][j] for i in range(n))
