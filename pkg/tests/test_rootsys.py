import pytest

from chevperm.rootsys import (
    check_reflection_transfer,
    check_stability_separation,
    root_datum,
)

SIZES = {"A1": (1, 2, 1), "A2": (3, 6, 3), "A3": (6, 24, 6), "B2": (4, 8, 4)}


@pytest.mark.parametrize("kind", sorted(SIZES))
def test_counts_and_longest(kind):
    n_pos, order, top = SIZES[kind]
    datum = root_datum(kind)
    assert datum.n_pos == n_pos
    assert len(datum.roots) == 2 * n_pos
    assert len(datum.elements) == order
    w0 = datum.longest_element(range(datum.rank))
    assert w0.length == top
    # w0 sends every positive root negative
    assert datum.phi_minus(w0) == sorted(
        range(n_pos), key=lambda i: (-sum(datum.roots[i]), datum.roots[i])
    )


def test_a2_lengths_multiset():
    datum = root_datum("A2")
    assert sorted(w.length for w in datum.elements) == [0, 1, 1, 2, 2, 3]


def test_enumeration_is_shortlex_sorted():
    datum = root_datum("B2")
    keys = [(w.length, w.word) for w in datum.elements]
    assert keys == sorted(keys)
    assert datum.elements[0] is datum.identity


@pytest.mark.parametrize("kind", sorted(SIZES))
def test_group_axioms_and_words(kind):
    datum = root_datum(kind)
    for w in datum.elements:
        # cached word multiplies back to w and has minimal possible length
        acc = datum.identity
        for i in w.word:
            acc = acc * datum.simple_reflection(i)
        assert acc == w
        assert (w * w.inverse()) == datum.identity
        assert w.length == len(datum.phi_minus(w))


@pytest.mark.parametrize("kind", sorted(SIZES))
def test_right_descents_match_root_sign_criterion(kind):
    # l(ws) < l(w) exactly when w(alpha_s) is a negative root
    datum = root_datum(kind)
    for w in datum.elements:
        by_length = datum.right_descents(w)
        by_sign = frozenset(
            i
            for i in range(datum.rank)
            if w.perm[datum.simple_indices[i]] >= datum.n_pos
        )
        assert by_length == by_sign


def test_length_subadditive():
    datum = root_datum("A3")
    for w1 in datum.elements[:10]:
        for w2 in datum.elements[:10]:
            prod = w1 * w2
            assert prod.length <= w1.length + w2.length
            assert (prod.length - w1.length - w2.length) % 2 == 0


def test_a2_min_coset_reps_and_y_set():
    datum = root_datum("A2")
    reps = datum.min_coset_reps({0})
    assert sorted(w.word for w in reps) == [(), (0, 1), (1,)]
    ys = datum.y_set({0})
    assert sorted(w.word for w in ys) == [(), (1,)]
    assert [w.word for w in datum.y_set(frozenset())] == [()]
    assert [w.word for w in datum.y_set({0, 1})] == [()]


def test_b2_y_set_sizes():
    datum = root_datum("B2")
    assert len(datum.y_set({0})) == 3
    assert len(datum.y_set({1})) == 3
    assert len(datum.y_set(frozenset())) == 1
    assert len(datum.y_set({0, 1})) == 1


def test_phi_minus_order_tallest_first():
    datum = root_datum("B2")
    w0 = datum.longest_element(range(2))
    heights = [sum(datum.roots[i]) for i in datum.phi_minus(w0)]
    assert heights == sorted(heights, reverse=True)
    assert heights[0] == 3  # the tall root 2*a1+a2


@pytest.mark.parametrize(
    "kind,J,lv",
    [("A2", frozenset({0}), 1), ("A2", frozenset(), 0), ("A2", frozenset({0, 1}), 0),
     ("B2", frozenset({0}), 2), ("A3", frozenset({0, 2}), 3)],
)
def test_w0_factorization(kind, J, lv):
    datum = root_datum(kind)
    vJ, wJ, wJp = datum.w0_factorization(J)
    assert vJ.length == lv
    assert vJ * wJ * wJp == datum.longest_element(range(datum.rank))


def test_sigma_permutation():
    assert root_datum("A1").sigma() == {0: 0}
    assert root_datum("A2").sigma() == {0: 1, 1: 0}
    assert root_datum("A3").sigma() == {0: 2, 1: 1, 2: 0}
    assert root_datum("B2").sigma() == {0: 0, 1: 1}


def test_poincare_sums():
    assert root_datum("A2").poincare_sum(frozenset(), 2) == 21
    assert root_datum("A2").poincare_sum(frozenset(), 4) == 105
    assert root_datum("B2").poincare_sum(frozenset(), 2) == 45
    assert root_datum("A2").poincare_sum({0}, 2) == 7
    assert root_datum("A1").poincare_sum(frozenset(), 2) == 3


@pytest.mark.parametrize("kind", sorted(SIZES))
def test_reflection_transfer_sweep(kind):
    checked, vacuous, bad = check_reflection_transfer(root_datum(kind))
    assert bad == []
    assert checked > 0


@pytest.mark.parametrize("kind", ["A2", "A3", "B2"])
def test_stability_separation_sweep(kind):
    checked, vacuous, bad = check_stability_separation(root_datum(kind))
    assert bad == []
    assert checked > 0


def test_stability_separation_a1_vacuous():
    checked, vacuous, bad = check_stability_separation(root_datum("A1"))
    assert bad == []
    assert checked == 0


def test_unsupported_type():
    with pytest.raises(ValueError):
        root_datum("G2")
