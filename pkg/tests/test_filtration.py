import random

import pytest
from hypothesis import given, settings, strategies as st

from lefrank.filtration import (CanonicalFiltration, canonical_filtration, check_against_formula, check_axioms,
                                filtration_dims, graded_piece, image_level, is_saturated_at, maps_into, saturation_level,
                                schur_vanishing, try_extend_to_g)
from lefrank.modules import (BModule, GradedHom, decompose_g, direct_sum, dual, equivariant_hom_basis,
                             irreducible, random_bmodule, random_equivariant_hom, shift, tensor, trivial)
from lefrank.linalg import MatrixQ, Subspace

from oracles import dual_level, level_equal, sum_level, tensor_level

seeds = st.integers(0, 10 ** 6)


def test_g_module_concentrates_at_zero():
    for d in range(5):
        f = canonical_filtration(irreducible(d).base)
        assert (f.lo, f.hi) == (0, 0)
        assert f.dim(-1) == 0 and f.dim(0) == d + 1


@pytest.mark.parametrize("k", [-3, 0, 2, 5])
def test_shifted_irreducible(k):
    f = canonical_filtration(shift(irreducible(2).base, k))
    assert (f.lo, f.hi) == (k, k)


def test_kodaira_thurston_filtration(kt):
    f = canonical_filtration(kt.module())
    assert [f.dim(m) for m in range(4)] == [0, 1, 11, 12]
    assert (f.lo, f.hi) == (1, 3)
    assert check_axioms(kt.module(), f) == (True, "")
    # V_1 is the line in H^1 killed by omega
    v1 = f.level(1)[1]
    assert v1.dim == 1
    assert not any(kt.module().e(1).apply(v1.basis[0]))


def test_filtration_dims_examples(kt):
    t = filtration_dims(irreducible(3).base)
    assert t.entries == {0: {3: 1}}
    assert filtration_dims(trivial(3)).entries == {0: {0: 3}}
    t = filtration_dims(kt.module())
    assert t.entries == {1: {0: 1}, 2: {0: 3, 1: 2, 2: 1}, 3: {0: 1}}
    assert t.total() == 12


def test_saturation_level_examples(kt, cp):
    for n in (1, 2, 4):
        assert saturation_level(cp(n).module()) == (n, n)
    assert saturation_level(kt.module()) == (1, 3)
    assert saturation_level(trivial(1, 5)) == (5, 5)


def test_graded_piece_examples(kt):
    l2 = irreducible(2)
    g = graded_piece(canonical_filtration(l2.base), 0)
    assert g.base == l2.base and all(g.f(k) == l2.f(k) for k in l2.base.weights)
    f = canonical_filtration(kt.module())
    assert decompose_g(graded_piece(f, 2)) == {0: 3, 1: 2, 2: 1}
    assert decompose_g(graded_piece(f, 1)) == {0: 1}
    assert decompose_g(graded_piece(f, 3)) == {0: 1}


def _shifted_by_one(f: CanonicalFiltration) -> CanonicalFiltration:
    steps = {m + 1: s for m, s in f.steps.items()}
    return CanonicalFiltration(f.module, steps, f.lo + 1, f.hi + 1)


def test_check_axioms_rejects_tampering(kt):
    v = BModule.build({0: 1, 2: 1}, {0: [[1]]})
    f = canonical_filtration(v)
    assert check_axioms(v, f)[0]
    ok, why = check_axioms(v, _shifted_by_one(f))
    assert not ok and "axiom 4" in why
    m = kt.module()
    zero = {k: m.zero(k) for k in m.weights}
    full = {k: m.full(k) for k in m.weights}
    lumped = CanonicalFiltration(m, {2: zero, 3: full}, 3, 3)
    ok, why = check_axioms(m, lumped)
    assert not ok and "axiom 4" in why


def test_check_axioms_rejects_open_step():
    v = BModule.build({0: 1, 2: 1}, {0: [[1]]})
    bad = {0: {0: Subspace.zero(1), 2: Subspace.zero(1)},
           1: {0: Subspace.full(1), 2: Subspace.zero(1)},
           2: {0: Subspace.full(1), 2: Subspace.full(1)}}
    ok, why = check_axioms(v, CanonicalFiltration(v, bad, 1, 2))
    assert not ok and "axiom 3" in why


def test_try_extend_to_g(cp):
    l2 = irreducible(2)
    g = try_extend_to_g(l2.base)
    assert g is not None and all(g.f(k) == l2.f(k) for k in l2.base.weights)
    assert try_extend_to_g(shift(trivial(1), 1)) is None
    h = cp(3).module()
    assert try_extend_to_g(h) is None
    g = try_extend_to_g(shift(h, -3))
    assert g is not None and decompose_g(g) == {3: 1}


def test_schur_vanishing_examples():
    l1, l2 = irreducible(1).base, irreducible(2).base
    assert schur_vanishing(l1, l1) == {0: False}
    assert schur_vanishing(l1, l2) == {0: True}
    assert schur_vanishing(trivial(1, 1), trivial(1, 3)) == {1: True, 3: True}


def test_schur_vanishing_is_sound():
    # where a level is flagged, every b-hom induces zero there
    v = direct_sum(irreducible(1).base, shift(trivial(1), 2))
    w = direct_sum(irreducible(2).base, shift(irreducible(1).base, 2))
    flags = schur_vanishing(v, w)
    assert flags == {0: True, 2: True}
    fv, fw = canonical_filtration(v), canonical_filtration(w)
    for phi in equivariant_hom_basis(v, w):
        for m, forced in flags.items():
            if forced:
                assert maps_into(phi, fv, fw, 0)
                img = image_level(phi, fv.level(m))
                below = fw.level(m - 1)
                assert all(below[k].contains(s) for k, s in img.items() if s.dim)


def test_zero_module():
    z = BModule.build({})
    f = canonical_filtration(z)
    assert (f.lo, f.hi) == (0, 0) and not f.steps
    assert check_axioms(z, f)[0]


# -- properties over random modules -------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(seeds)
def test_fixed_point_matches_axioms_and_formula(seed):
    v = random_bmodule(seed, 8, 10)
    f = canonical_filtration(v)
    assert check_axioms(v, f) == (True, "")
    check_against_formula(f)
    table = filtration_dims(v)
    assert all(c >= 0 for row in table.entries.values() for c in row.values())
    assert table.total() == v.total_dim
    assert f.lo <= f.hi


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_saturation_equivalence(seed):
    v = random_bmodule(seed, 8, 9)
    f = canonical_filtration(v)
    ws = v.weights
    for m in range(ws[0] - 2, ws[-1] + 3):
        assert all(s.is_full() for s in f.level(m).values()) == is_saturated_at(v, m)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_dual_identity(seed):
    v = random_bmodule(seed, 6, 8)
    fv, fd = canonical_filtration(v), canonical_filtration(dual(v))
    d = dual(v)
    for m in range(-max(map(abs, v.weights)) - 3, max(map(abs, v.weights)) + 3):
        assert level_equal(fd.level(m), dual_level(fv, m), d.weights)


@settings(max_examples=60, deadline=None)
@given(seeds, seeds)
def test_direct_sum_identity(s1, s2):
    v, w = random_bmodule(s1, 5, 6), random_bmodule(s2, 5, 6)
    s = direct_sum(v, w)
    fv, fw, fs = canonical_filtration(v), canonical_filtration(w), canonical_filtration(s)
    for m in range(min(s.weights) - 2, max(s.weights) + 3):
        assert level_equal(fs.level(m), sum_level(fv, fw, v, w, m), s.weights)


@settings(max_examples=40, deadline=None)
@given(seeds, seeds)
def test_tensor_identity(s1, s2):
    v, w = random_bmodule(s1, 4, 4), random_bmodule(s2, 4, 4)
    t = tensor(v, w)
    fv, fw, ft = canonical_filtration(v), canonical_filtration(w), canonical_filtration(t)
    for m in range(min(t.weights) - 2, max(t.weights) + 3):
        assert level_equal(ft.level(m), tensor_level(fv, fw, v, w, m, t.weights), t.weights)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(-6, 6))
def test_shift_identity(seed, k):
    v = random_bmodule(seed, 6, 8)
    fv, fs = canonical_filtration(v), canonical_filtration(shift(v, k))
    assert (fs.lo, fs.hi) == (fv.lo + k, fv.hi + k)
    for m in range(min(v.weights) - 2, max(v.weights) + 3):
        lv, ls = fv.level(m), fs.level(m + k)
        assert all(ls[j + k] == lv[j] for j in v.weights)


@settings(max_examples=60, deadline=None)
@given(seeds, seeds, seeds)
def test_homs_preserve_filtration(s1, s2, s3):
    rng = random.Random(s3)
    v, w = random_bmodule(s1, 5, 6), random_bmodule(s2, 5, 6)
    fv, fw = canonical_filtration(v), canonical_filtration(w)
    phi = random_equivariant_hom(v, w, 0, rng)
    assert maps_into(phi, fv, fw)
    # inclusion and projection of a direct sum, composed with phi
    s = direct_sum(v, w)
    fs = canonical_filtration(s)
    inc = GradedHom(v, s, 0, {k: MatrixQ.from_rows([[int(i == j) for j in range(v.dim(k))]
                                                     for i in range(s.dim(k))], v.dim(k))
                              for k in v.weights})
    proj = GradedHom(s, w, 0, {k: MatrixQ.from_rows([[int(j == v.dim(k) + i) for j in range(s.dim(k))]
                                                      for i in range(w.dim(k))], s.dim(k))
                               for k in s.weights})
    assert maps_into(inc, fv, fs) and maps_into(proj, fs, fw)
    assert maps_into(proj.compose(inc), fv, fw)


@settings(max_examples=50, deadline=None)
@given(seeds, seeds, st.integers(-3, 3))
def test_shifted_homs_move_levels(s1, s2, k):
    v, w = random_bmodule(s1, 5, 6), random_bmodule(s2, 5, 6)
    fv, fw = canonical_filtration(v), canonical_filtration(w)
    for phi in equivariant_hom_basis(v, w, k):
        assert maps_into(phi, fv, fw, k)
