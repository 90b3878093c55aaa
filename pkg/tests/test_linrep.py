"""Exact linear algebra and module machinery, checked against small
hand-computable oracles and a brute-forced submodule lattice."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevperm.chevalley import FlagIndex, matrix_group
from chevperm.linrep import (
    MeatAxeBudgetError,
    ModuleHandle,
    Subspace,
    composition_series,
    fixed_space,
    line_representatives,
    mat_inverse,
    meataxe_irreducible,
    nullspace,
    quotient,
    restrict,
    rref,
    socle_simple_check,
    spin,
)


# -- row echelon / nullspace --------------------------------------------------


def test_rref_frozen_mod2():
    R, piv = rref(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]]), 2)
    assert piv == (0, 1)
    assert R.tolist() == [[1, 0, 1], [0, 1, 1]]


def test_rref_frozen_mod5():
    R, piv = rref(np.array([[2, 4], [1, 2]]), 5)
    # 2x + 4y: scale by inverse of 2 (=3): x + 2y; second row is dependent
    assert piv == (0,)
    assert R.tolist() == [[1, 2]]


def test_nullspace_annihilates_and_rank_nullity():
    rng = np.random.default_rng(5)
    for l in (2, 3, 5):
        for _ in range(20):
            M = rng.integers(0, l, size=(4, 6))
            N = nullspace(M, l)
            rank = len(rref(M, l)[0])
            assert rank + len(N) == 6
            if len(N):
                assert not np.any((M @ N.T) % l)


def test_mat_inverse_and_singular():
    M = np.array([[1, 1], [0, 1]])
    assert mat_inverse(M, 3).tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ValueError):
        mat_inverse(np.array([[1, 1], [2, 2]]), 3)


# -- subspaces ----------------------------------------------------------------


def test_subspace_membership_and_coords():
    S = Subspace(4, 3, np.array([[1, 0, 2, 0], [0, 1, 1, 0]]))
    assert S.dim == 2 and S.pivots == (0, 1)
    v = (2 * S.rows[0] + S.rows[1]) % 3
    assert S.contains(v)
    assert S.coords(v).tolist() == [2, 1]
    assert np.array_equal(S.lift(S.coords(v)), v)
    assert not S.contains([0, 0, 0, 1])


def test_subspace_sum_intersect_frozen():
    A = Subspace(3, 2, np.array([[1, 1, 0]]))
    B = Subspace(3, 2, np.array([[0, 1, 1]]))
    assert A.sum(B).dim == 2
    assert A.intersect(B).dim == 0
    C = Subspace(3, 2, np.array([[1, 1, 0], [0, 0, 1]]))
    meet = A.intersect(C)
    assert meet.dim == 1 and meet.rows.tolist() == [[1, 1, 0]]


def test_perp_dimensions_and_double_perp():
    S = Subspace(5, 3, np.array([[1, 0, 0, 1, 2], [0, 1, 0, 0, 1]]))
    P = S.perp()
    assert P.dim == 3
    assert not np.any((S.rows @ P.rows.T) % 3)
    assert P.perp() == S


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=4),
       st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=4))
def test_dimension_formula(rows_a, rows_b):
    A = Subspace(4, 3, np.array(rows_a))
    B = Subspace(4, 3, np.array(rows_b))
    assert A.sum(B).dim + A.intersect(B).dim == A.dim + B.dim


def test_line_representatives_count():
    basis = np.eye(2, dtype=np.int64)
    lines = list(line_representatives(basis, 3))
    assert len(lines) == 4  # (3^2-1)/(3-1)
    as_tuples = {tuple(v) for v in lines}
    assert as_tuples == {(1, 0), (0, 1), (1, 1), (1, 2)}


# -- module handles -----------------------------------------------------------


def cyclic_shift_module(l, n=3):
    # the label sends basis vector i to basis vector i+1 (mod n)
    h = ModuleHandle(n, l, ["c"])
    h.add_perm("c", np.roll(np.arange(n), -1))
    return h


def test_perm_action_matches_matrix():
    h = cyclic_shift_module(5)
    v = np.array([1, 2, 3])
    shifted = h.apply("c", v)
    assert shifted.tolist() == [3, 1, 2]
    assert np.array_equal((h.matrix("c") @ v) % 5, shifted)
    assert np.array_equal(h.apply("c", shifted, inverse=True), v)


def test_apply_word_and_operator_agree():
    h = cyclic_shift_module(3)
    h.add_matrix("m", np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    v = np.array([1, 0, 2])
    word = ["c", "m", "c"]
    assert np.array_equal(h.apply_word(word, v), (h.operator(word) @ v) % 3)


def test_spin_oracles_for_cyclic_shift():
    h = cyclic_shift_module(2)
    assert spin(h, [h.basis_vector(0)]).dim == 3
    assert spin(h, [np.array([1, 1, 1])]).dim == 1
    # e0 + e1 spins to the coordinate-sum-zero plane
    S = spin(h, [np.array([1, 1, 0])])
    assert S.dim == 2
    assert all(int(row.sum()) % 2 == 0 for row in S.rows)


def test_fixed_space_of_cyclic_shift():
    for l in (2, 3, 5):
        F = fixed_space(cyclic_shift_module(l))
        assert F.dim == 1 and F.rows.tolist() == [[1, 1, 1]]


def test_fixed_space_no_labels_is_everything():
    h = cyclic_shift_module(3)
    assert fixed_space(h, []).dim == 3


# -- integration: the rank-one flag module ------------------------------------


def borel_perm_module(kind, q, l):
    """Permutation module on the full flag variety as a ModuleHandle, with
    one labelled generator per simple root-subgroup element."""
    group = matrix_group(kind, q)
    fi = FlagIndex(group)
    datum = group.datum
    handle = ModuleHandle(len(fi), l, [])
    for si in datum.simple_indices:
        neg = datum.root_index[tuple(-c for c in datum.roots[si])]
        for root in (si, neg):
            for c in group.field.fp_basis():
                label = ("u", root, c)
                handle.add_perm(label, fi.perm_of_word([(root, c)]))
                handle.spin_labels.append(label)
    return group, fi, handle


def brute_force_invariant_subspaces(handle):
    """All invariant subspaces, by spanning every subset of F_l^n.  Only
    usable for tiny modules; this is the oracle the fast path must match."""
    l, n = handle.l, handle.dim
    vectors = [np.array(t) for t in itertools.product(range(l), repeat=n) if any(t)]
    seen = {}
    for size in range(len(vectors) + 1):
        for combo in itertools.combinations(range(len(vectors)), min(size, 3)):
            S = Subspace(n, l, np.array([vectors[i] for i in combo]) if combo else None)
            seen[S.rows.tobytes() + bytes([S.dim])] = S
        if size >= 3:
            break
    invariant = []
    for S in seen.values():
        if all(
            S.contains(handle.apply(lbl, row))
            for lbl in handle.spin_labels
            for row in S.rows
        ):
            invariant.append(S)
    return invariant


def test_flag_module_lattice_matches_brute_force():
    _, _, handle = borel_perm_module("A1", 2, 2)
    assert handle.dim == 3
    lattice = brute_force_invariant_subspaces(handle)
    dims = sorted(S.dim for S in lattice)
    # zero, the constants line, the sum-zero plane, everything
    assert dims == [0, 1, 2, 3]
    for S in lattice:
        if S.dim == 1:
            assert S.rows.tolist() == [[1, 1, 1]]
        if S.dim == 2:
            assert all(int(r.sum()) % 2 == 0 for r in S.rows)


def test_spin_finds_the_same_lattice():
    _, _, handle = borel_perm_module("A1", 2, 2)
    spun = {spin(handle, [v]).rows.tobytes() for v in line_representatives(np.eye(3, dtype=np.int64), 2)}
    spun_dims = sorted(
        spin(handle, [v]).dim for v in line_representatives(np.eye(3, dtype=np.int64), 2)
    )
    # the constants line, the three lines inside the sum-zero plane, and the
    # three point masses (which generate everything)
    assert spun_dims == [1, 2, 2, 2, 3, 3, 3]
    assert len(spun) == 3


def test_restrict_quotient_roundtrip():
    _, _, handle = borel_perm_module("A1", 2, 2)
    plane = spin(handle, [np.array([1, 1, 0])])
    sub = restrict(handle, plane)
    assert sub.dim == 2
    quot, project = quotient(handle, plane)
    assert quot.dim == 1
    for row in plane.rows:
        assert not np.any(project(row))
    # the quotient of a transitive permutation module by the sum-zero part
    # is the trivial module
    for lbl in quot.actions:
        assert quot.matrix(lbl).tolist() == [[1]]


def test_restrict_rejects_non_invariant():
    _, _, handle = borel_perm_module("A1", 2, 2)
    not_invariant = Subspace(3, 2, np.array([[1, 0, 0]]))
    with pytest.raises(AssertionError):
        restrict(handle, not_invariant)


# -- irreducibility verdicts --------------------------------------------------


def test_meataxe_dim1_and_zero():
    h = ModuleHandle(1, 2, ["c"])
    h.add_perm("c", np.array([0]))
    assert meataxe_irreducible(h).irreducible
    z = ModuleHandle(0, 2, [])
    with pytest.raises(ValueError):
        meataxe_irreducible(z)


def test_meataxe_on_flag_module():
    _, _, handle = borel_perm_module("A1", 2, 2)
    verdict = meataxe_irreducible(handle, seed=1)
    assert not verdict.irreducible
    assert 0 < verdict.witness.dim < 3
    # the witness really is invariant
    W = verdict.witness
    for lbl in handle.spin_labels:
        for row in W.rows:
            assert W.contains(handle.apply(lbl, row))


def test_meataxe_irreducible_plane():
    h = cyclic_shift_module(2)
    plane = spin(h, [np.array([1, 1, 0])])
    sub = restrict(h, plane)
    verdict = meataxe_irreducible(sub, seed=0)
    # x^2 + x + 1 has no root mod 2, so the shift plane is irreducible
    assert verdict.irreducible
    assert verdict.certificate["method"] in ("singular-element", "exhaustive-lines")


def test_meataxe_trivial_action_uses_fallback():
    h = ModuleHandle(2, 2, ["e"])
    h.add_perm("e", np.arange(2))
    verdict = meataxe_irreducible(h, seed=0, budget=5)
    assert not verdict.irreducible
    assert verdict.certificate["method"] == "exhaustive-lines"
    assert verdict.witness.dim == 1


def test_meataxe_budget_error():
    h = ModuleHandle(12, 2, ["e"])
    h.add_perm("e", np.arange(12))
    with pytest.raises(MeatAxeBudgetError):
        meataxe_irreducible(h, seed=0, budget=3)


# -- composition series -------------------------------------------------------


def test_composition_series_flag_module_mod2():
    _, _, handle = borel_perm_module("A1", 2, 2)
    assert composition_series(handle, seed=0) == [1, 2]


def test_composition_series_flag_module_mod5():
    # 5 does not divide |SL_2(F_2)| = 6, so the module is semisimple with
    # the same factor dimensions
    _, _, handle = borel_perm_module("A1", 2, 5)
    assert composition_series(handle, seed=0) == [1, 2]


def test_composition_series_trivial_action():
    h = ModuleHandle(3, 3, ["e"])
    h.add_perm("e", np.arange(3))
    assert composition_series(h, seed=2) == [1, 1, 1]


def test_composition_series_seed_stable():
    _, _, handle = borel_perm_module("A2", 2, 2)
    first = composition_series(handle, seed=0)
    second = composition_series(handle, seed=0)
    assert first == second
    assert sum(first) == 21


# -- socle --------------------------------------------------------------------


def test_socle_check_unique_minimal():
    # GF(3)[C_3] is uniserial: the constants line is the whole socle
    h = cyclic_shift_module(3)
    res = socle_simple_check(h, np.array([1, 1, 1]), ["c"])
    assert res["ok"] and res["socle_dim"] == 1
    assert res["fixed_dim"] == 1 and res["lines_checked"] == 1
    assert res["candidate_fixed"]


def test_socle_check_detects_split_socle():
    # mod 2 the flag module for SL_2(F_2) has two minimal submodules, so no
    # single vector generates the socle
    _, _, handle = borel_perm_module("A1", 2, 2)
    u_labels = [lbl for lbl in handle.spin_labels if lbl[1] == 0]  # one root subgroup
    res = socle_simple_check(handle, np.array([1, 1, 1]), u_labels)
    assert not res["ok"]
    assert not res["all_contain"]


def test_socle_check_rejects_zero_candidate():
    h = cyclic_shift_module(3)
    with pytest.raises(AssertionError):
        socle_simple_check(h, np.zeros(3, dtype=np.int64), ["c"])
