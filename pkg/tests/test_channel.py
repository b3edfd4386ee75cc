import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combibounds.channel import (
    Certificate,
    Channel,
    ChannelError,
    WeightVec,
    apply,
    apply_transpose,
    check_cover,
    check_packing,
    closed_neighborhood_channel,
    compose,
    confusability,
    cover_violations,
    input_degrees,
    is_code,
    output_degrees,
    packing_violations,
)
from combibounds.zoo import deletion_channel, random_channel

from conftest import fig1


@st.composite
def channels(draw, max_side: int = 7):
    nx = draw(st.integers(1, max_side))
    ny = draw(st.integers(1, max_side))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.floats(0.05, 0.9))
    return random_channel(nx, ny, density, random.Random(seed))


def test_degrees_fig1(fig1_channel):
    assert list(input_degrees(fig1_channel)) == [1, 2, 2, 2]
    assert list(output_degrees(fig1_channel)) == [3, 2, 2]


def test_degrees_identity_and_deletion():
    assert list(input_degrees(Channel.identity(3))) == [1, 1, 1]
    assert list(output_degrees(Channel.identity(3))) == [1, 1, 1]
    A = deletion_channel(3)
    assert input_degrees(A)[A.input_labels.index("010")] == 3


@pytest.mark.parametrize(
    "nbrs, ny, message",
    [([[0], []], 1, "isolated input"), ([[0]], 2, "isolated output"), ([[0, 0]], 1, "duplicate"), ([[3]], 2, "out of range")],
)
def test_definition_violations(nbrs, ny, message):
    with pytest.raises(ChannelError, match=message):
        Channel.from_neighborhoods(nbrs, ny)


def test_from_edges_matches_neighborhoods(fig1_channel):
    assert Channel.from_edges(4, 3, list(fig1_channel.edges())) == fig1_channel


def test_compose_fig1(fig1_channel):
    B = compose(fig1_channel, fig1_channel.transpose())
    expected = {(x, y) for x in range(4) for y in range(4)} - {(0, 3), (3, 0)}
    assert set(B.edges()) == expected


def test_compose_identity(fig1_channel):
    assert compose(Channel.identity(4), fig1_channel) == fig1_channel


def test_compose_dimension_mismatch(fig1_channel):
    with pytest.raises(ChannelError, match="cannot compose"):
        compose(fig1_channel, fig1_channel)


def _brute_compose(A: Channel, B: Channel) -> set[tuple[int, int]]:
    return {
        (x, z)
        for x in range(A.num_inputs)
        for z in range(B.num_outputs)
        if any(A.has_edge(x, y) and B.has_edge(y, z) for y in range(A.num_outputs))
    }


def test_compose_random_against_brute_force():
    rng = random.Random(1)
    for _ in range(20):
        A = random_channel(5, 4, 0.4, rng)
        B = random_channel(4, 6, 0.4, rng)
        assert set(compose(A, B).edges()) == _brute_compose(A, B)


@given(channels(), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_compose_property(A, seed):
    B = random_channel(A.num_outputs, 5, 0.3, random.Random(seed))
    assert set(compose(A, B).edges()) == _brute_compose(A, B)


def test_confusability_fig1(fig1_channel):
    G = confusability(fig1_channel)
    assert G.edges == {(u, v) for u in range(4) for v in range(u + 1, 4)} - {(0, 3)}


def test_confusability_identity_and_deletion():
    assert confusability(Channel.identity(4)).num_edges == 0
    A = deletion_channel(4)
    u, v = A.input_labels.index("0000"), A.input_labels.index("0001")
    assert v in confusability(A).adjacency[u]


@given(channels())
@settings(max_examples=60, deadline=None)
def test_closed_neighborhood_is_a_a_transpose(A):
    assert closed_neighborhood_channel(confusability(A)) == compose(A, A.transpose())


@given(channels())
@settings(max_examples=60, deadline=None)
def test_codes_are_independent_sets(A):
    G = confusability(A)
    for size in range(min(A.num_inputs, 3) + 1):
        for S in itertools.combinations(range(A.num_inputs), size):
            assert is_code(A, S) == G.is_independent(S)


@given(channels())
@settings(max_examples=60, deadline=None)
def test_degree_sums_equal_edges(A):
    assert sum(input_degrees(A)) == sum(output_degrees(A)) == A.num_edges


def test_is_code_examples(fig1_channel):
    assert is_code(fig1_channel, {0, 3})
    assert not is_code(fig1_channel, {1, 2})
    assert is_code(fig1_channel, set())
    assert all(is_code(fig1_channel, {x}) for x in range(4))
    with pytest.raises(ChannelError):
        is_code(fig1_channel, {4})


def test_cover_checks(fig1_channel):
    assert check_cover(fig1_channel, [1, 1, 1])
    z = [Fraction(1), Fraction(1, 2), Fraction(1, 2)]
    assert check_cover(fig1_channel, z) and sum(z) == 2
    assert not check_cover(fig1_channel, [0, 1, 1])
    assert cover_violations(fig1_channel, [0, 1, 1]) == [0]
    assert cover_violations(fig1_channel, [-1, 2, 2]) == [-1, 0]


def test_packing_checks(fig1_channel):
    assert check_packing(fig1_channel, [1, 0, 0, 1])
    half = [Fraction(1, 2)] * 4
    assert not check_packing(fig1_channel, half)
    assert packing_violations(fig1_channel, half) == [0]
    code = Certificate.from_index_set("integer-packing", "input", 4, [0, 3])
    assert code.verify(fig1_channel) and code.value == 2


def test_weight_length_checked(fig1_channel):
    with pytest.raises(ChannelError):
        check_cover(fig1_channel, [1, 1])


def test_apply_and_transpose(fig1_channel):
    assert apply(fig1_channel, [1, 1, 1]) == [1, 2, 2, 2]
    assert apply_transpose(fig1_channel, [1, 1, 1, 1]) == [3, 2, 2]


def test_certificate_rejects_wrong_value(fig1_channel):
    cert = Certificate("cover", WeightVec("output", [1, Fraction(1, 2), Fraction(1, 2)]), 3)
    assert not cert.verify(fig1_channel)
    frac = Certificate("integer-cover", WeightVec("output", [1, Fraction(1, 2), Fraction(1, 2)]), 2)
    assert not frac.verify(fig1_channel)


def test_weightvec_order_and_sides():
    a = WeightVec("output", [1, 2])
    assert a <= [1, 3] and not a <= [0, 5]
    with pytest.raises(ChannelError):
        WeightVec("middle", [1])


def test_fig1_helper_is_the_documented_matrix():
    rows = [[int(fig1().has_edge(x, y)) for y in range(3)] for x in range(4)]
    assert rows == [[1, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
