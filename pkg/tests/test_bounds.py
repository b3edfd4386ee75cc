import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combibounds.bounds import (
    BoundError,
    caro_wei,
    dsl,
    dsu,
    dsu_threshold,
    edge_only_lower,
    edge_only_lower_tight,
    edge_only_upper,
    edge_only_upper_tight,
    integer_floor_ceil,
    ldl,
    ldu_iterated,
    local_degree_step,
    mdl,
    mdu,
    motzkin_straus,
    turan,
)
from combibounds.channel import Channel, ChannelError, WeightVec, apply, check_cover
from combibounds.deletion import deletion_cover_thm1_vector
from combibounds.lp import fractional_packing, integer_covering, integer_packing
from combibounds.zoo import (
    complete_graph,
    cycle_graph,
    deletion_channel,
    empty_graph,
    erasure_substitution_channel,
    path_graph,
    random_channel,
    star_graph,
)


@st.composite
def channel_and_weights(draw, side: str = "output"):
    nx = draw(st.integers(1, 8))
    ny = draw(st.integers(1, 8))
    A = random_channel(nx, ny, draw(st.floats(0.1, 0.8)), random.Random(draw(st.integers(0, 10**9))))
    size = ny if side == "output" else nx
    t = draw(st.lists(st.fractions(min_value=Fraction(1, 10), max_value=10), min_size=size, max_size=size))
    return A, t


# -- upper bounds ---------------------------------------------------------------


def test_mdu_examples(fig1_channel):
    assert mdu(fig1_channel).exact == 3
    assert mdu(Channel.identity(5)).exact == 5
    A = erasure_substitution_channel(2, 4, 1, 1)
    d = A.input_nbrs[0].__len__()
    assert mdu(A).exact == Fraction(A.num_outputs, d)


def test_mdu_certificate_is_cover(fig1_channel):
    rep = mdu(fig1_channel)
    assert rep.direction == "upper-on-p"
    assert rep.certificate.verify(fig1_channel)


def test_local_degree_step_examples(fig1_channel):
    phi = local_degree_step(fig1_channel, [1, 1, 1])
    assert list(phi) == [1, Fraction(1, 2), Fraction(1, 2)]
    assert phi.total() == 2
    # already a fixpoint
    assert local_degree_step(fig1_channel, phi) == phi


@pytest.mark.parametrize("n", range(2, 9))
def test_phi_of_ones_on_deletion_is_inverse_runs(n):
    A = deletion_channel(n)
    phi = local_degree_step(A, [1] * A.num_outputs)
    for y, word in enumerate(A.output_labels):
        runs = 1 + sum(a != b for a, b in zip(word, word[1:]))
        assert phi[y] == Fraction(1, runs)


def test_ldu_examples(fig1_channel):
    assert ldu_iterated(fig1_channel, k=1).exact == 2
    assert ldu_iterated(deletion_channel(7), k=1).floor == 21
    fix = ldu_iterated(fig1_channel, k=None)
    assert fix.params["fixpoint"] and fix.exact == 2


@pytest.mark.parametrize("n", range(3, 12))
def test_two_step_iterate_below_closed_form(n):
    A = deletion_channel(n)
    phi2 = ldu_iterated(A, k=2).certificate.vector
    assert phi2 <= deletion_cover_thm1_vector(n)


def test_two_step_iterate_values():
    assert ldu_iterated(deletion_channel(8), k=2).floor == 33
    assert ldu_iterated(deletion_channel(10), k=2).floor == 104


def test_ldu_rejects_bad_k(fig1_channel):
    with pytest.raises(ValueError):
        ldu_iterated(fig1_channel, k=0)


@given(channel_and_weights())
@settings(max_examples=80, deadline=None)
def test_phi_laws(data):
    A, z = data
    phi = local_degree_step(A, z)
    assert check_cover(A, phi)
    assert local_degree_step(A, phi) <= phi
    assert local_degree_step(A, [3 * v for v in z]) == phi
    low = min(apply(A, z))
    feasible = [v / low for v in z]
    assert local_degree_step(A, feasible) <= feasible


@given(channel_and_weights())
@settings(max_examples=80, deadline=None)
def test_dsu_dominates_local_degree(data):
    A, t = data
    rep = dsu(A, t)
    assert rep.params["dominates_phi"]
    assert rep.certificate.verify(A)
    assert local_degree_step(A, t) <= rep.certificate.vector
    assert ldu_iterated(A, t).exact <= rep.exact <= mdu(A, t).exact
    assert fractional_packing(A).value <= rep.exact


def test_dsu_examples(fig1_channel):
    assert dsu(fig1_channel).exact == 2
    A = erasure_substitution_channel(2, 4, 1, 1)
    assert dsu(A).exact == mdu(A).exact
    D = deletion_channel(8)
    assert dsu(D).exact >= ldu_iterated(D).exact


def test_dsu_threshold(fig1_channel):
    rep = dsu_threshold(fig1_channel, 2)
    assert rep.exact == 2
    assert rep.params["xs_form"] == Fraction(5, 2)
    assert rep.exact >= dsu(fig1_channel).exact


def test_dsu_threshold_deletion():
    rep = dsu_threshold(deletion_channel(10), 5)
    assert rep.exact == Fraction(1552, 5)
    assert rep.params["low_degree_inputs"] == 260


def test_dsu_threshold_printed_form_counterexample():
    # two inputs of degree 2 on disjoint outputs: p* = 2, printed form gives 1
    A = Channel.from_neighborhoods([[0, 1], [2, 3]], 4)
    assert fractional_packing(A).value == 2
    rep = dsu_threshold(A, 2)
    assert rep.exact >= 2 and rep.params["xs_form"] == 1


@given(channel_and_weights(), st.integers(1, 6))
@settings(max_examples=60, deadline=None)
def test_dsu_threshold_dominates_dsu(data, d):
    A, _ = data
    assert dsu_threshold(A, d).exact >= dsu(A).exact


def test_dsu_threshold_rejects_small_d(fig1_channel):
    with pytest.raises(BoundError):
        dsu_threshold(fig1_channel, 0)


def test_edge_only_upper(fig1_channel):
    assert edge_only_upper(Channel.identity(3)).exact == 3
    assert edge_only_upper(fig1_channel).exact == Fraction(8, 3)
    A = edge_only_upper_tight(5, 4, 3)
    assert edge_only_upper(A).exact == 3 == integer_covering(A).value


def test_edge_only_lower(fig1_channel):
    assert edge_only_lower(Channel.identity(3)).exact == 3
    assert edge_only_lower(fig1_channel).exact == 0
    A = edge_only_lower_tight(6, 4, 3)
    assert edge_only_lower(A).exact == 3 == integer_packing(A).value


# -- lower bounds -----------------------------------------------------------------


def test_lower_bound_examples(fig1_channel):
    assert mdl(fig1_channel).exact == Fraction(4, 3)
    assert ldl(fig1_channel).exact == Fraction(3, 2)
    assert dsl(fig1_channel).exact == Fraction(3, 2)
    for f in (mdl, ldl, dsl):
        rep = f(fig1_channel)
        assert rep.direction == "lower-on-kappa-star"
        assert rep.certificate is None or rep.certificate.verify(fig1_channel)


@pytest.mark.parametrize("n", range(2, 10))
def test_mdl_deletion(n):
    assert mdl(deletion_channel(n)).exact == Fraction(2**n, n + 1)


def test_output_regular_lower_bounds_agree():
    A = erasure_substitution_channel(2, 4, 1, 1)
    assert A.is_output_regular()
    d = len(A.output_nbrs[0])
    assert mdl(A).exact == ldl(A).exact == dsl(A).exact == Fraction(A.num_inputs, d)


@given(channel_and_weights("input"))
@settings(max_examples=80, deadline=None)
def test_lower_chain(data):
    A, t = data
    m, d, l = mdl(A, t).exact, dsl(A, t).exact, ldl(A, t).exact
    assert m <= d <= l <= fractional_packing(A).value


def test_weights_validated(fig1_channel):
    with pytest.raises(ChannelError):
        mdu(fig1_channel, [1, 1])
    with pytest.raises(BoundError):
        mdu(fig1_channel, [1, -1, 1])
    with pytest.raises(BoundError):
        mdu(fig1_channel, [0, 0, 0])


# -- graph bounds -----------------------------------------------------------------


def test_caro_wei_examples():
    assert caro_wei(star_graph(3)).exact == Fraction(7, 4)
    assert caro_wei(path_graph(6)).exact == Fraction(7, 3)
    assert caro_wei(empty_graph(5)).exact == 5


def test_motzkin_straus_examples():
    assert motzkin_straus(star_graph(3)).exact == Fraction(8, 5)
    assert motzkin_straus(empty_graph(1)).exact == 1
    G = cycle_graph(7)
    assert motzkin_straus(G).exact == turan(G).exact


def test_turan_examples():
    assert turan(cycle_graph(5)).exact == Fraction(5, 3)
    assert turan(empty_graph(4)).exact == 4
    assert turan(complete_graph(6)).exact == 1


def test_integer_rounding(fig1_channel):
    assert integer_floor_ceil(mdu(fig1_channel)) == 3
    assert integer_floor_ceil(mdl(fig1_channel)) == 2
    assert integer_floor_ceil(caro_wei(star_graph(3))) == 2


def test_certificate_weights_match_values(fig1_channel):
    for f in (mdu, dsu, ldu_iterated):
        rep = f(fig1_channel)
        assert isinstance(rep.certificate.vector, WeightVec)
        assert rep.certificate.value == rep.exact
