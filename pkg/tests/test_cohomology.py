import json

import pytest

from lefrank.cohomology import (InvalidRing, SymplecticData, check_ring, failing_map, hard_lefschetz,
                                lef_fil_equiv_report, lefschetz_bmodule, lefschetz_ranks, make_ring,
                                pairing_kills, poincare_graded_pairing, poincare_hom, ring_from_json, ring_to_json,
                                validate_ring, weak_lefschetz)
from lefrank.constructions import catalog, projective_space, symplectic_nilmanifold, torus
from lefrank.filtration import canonical_filtration, saturation_level
from lefrank.linalg import MatrixQ, rank
from lefrank.modules import is_bhom, trivial

from rings import cp3_sum_s1s5_s3s3

SYMPLECTIC = ["kodaira-thurston", "n6-0-0-0-0-12-13", "n6-0-0-0-12-13-23", "kt-x-t2", "n6-filiform"]


def all_symplectic(cp):
    out = [cp(n) for n in range(0, 5)]
    out += [symplectic_nilmanifold(catalog(name)) for name in SYMPLECTIC]
    out.append(SymplecticData.of(torus(2), "e12"))
    out.append(SymplecticData.of(cp3_sum_s1s5_s3s3(), "omega"))
    return out


def test_validate_ring_examples(data_dir):
    assert validate_ring(projective_space(0))
    cp2 = projective_space(2)
    assert validate_ring(cp2)
    flat = make_ring(4, [["1"], [], ["h"], [], ["h^2"]], {("h", "h"): {"h^2": 1}}, {})
    assert not validate_ring(flat)
    with pytest.raises(InvalidRing, match="degenerate"):
        check_ring(flat)
    broken = ring_from_json(json.loads((data_dir / "broken.ring.json").read_text()))
    with pytest.raises(InvalidRing, match=r"associativity fails for \(x, y, z\)"):
        check_ring(broken)


def test_graded_commutativity_enforced():
    with pytest.raises(InvalidRing, match="contradictory"):
        make_ring(2, [["1"], ["a", "b"], ["t"]], {("a", "b"): {"t": 1}, ("b", "a"): {"t": 1}}, {"t": 1})
    # an odd class squaring to nonzero contradicts its own sign rule
    with pytest.raises(InvalidRing, match="contradictory products for a\\*a"):
        make_ring(2, [["1"], ["a", "b"], ["t"]], {("a", "a"): {"t": 1}, ("a", "b"): {"t": 1}}, {"t": 1})


def test_ring_json_round_trip(kt, data_dir):
    doc = ring_to_json(kt.ring)
    assert ring_from_json(doc) == kt.ring
    frozen = json.loads((data_dir / "kt.ring.json").read_text())
    assert ring_from_json(frozen) == kt.ring


def test_lefschetz_bmodule_examples(kt):
    assert lefschetz_bmodule(projective_space(0), ()) == trivial(1)
    v = lefschetz_bmodule(projective_space(3), "h")
    assert dict(v.dims) == {0: 1, 2: 1, 4: 1, 6: 1}
    assert all(v.e(k) == MatrixQ.identity(1) for k in (0, 2, 4))
    m = kt.module()
    assert m.total_dim == 12 and dict(m.dims) == {0: 1, 1: 3, 2: 4, 3: 3, 4: 1}


def test_kodaira_thurston_lefschetz(kt):
    assert kt.ring.betti == [1, 3, 4, 3, 1]
    assert not hard_lefschetz(kt)
    assert weak_lefschetz(kt)
    assert rank(kt.module().e(1)) == 2
    assert failing_map(kt.ring, kt.omega, 2) == (1, 1, 2, 3)


def test_hard_lefschetz_examples(cp):
    for n in range(7):
        assert hard_lefschetz(cp(n)) and weak_lefschetz(cp(n))
    t2 = SymplecticData.of(torus(2), "e12")
    assert hard_lefschetz(t2)


def test_four_dimensional_fibers_are_weak(kt):
    t4 = SymplecticData.of(torus(4), [1, 0, 0, 0, 0, 1])  # e12 + e34
    for s in (t4, kt, SymplecticData.of(projective_space(2), "h")):
        assert s.ring.dim == 4 and weak_lefschetz(s)


def test_lef_fil_report_examples(kt, cp):
    assert lef_fil_equiv_report(cp(3), 3) == (True, True, True)
    assert lef_fil_equiv_report(kt, 2) == (False, False, False)
    assert lef_fil_equiv_report(kt, 3) == (True, True, True)


def test_poincare_pairing_examples(kt, cp):
    for n in range(1, 5):
        mat, ok = poincare_graded_pairing(cp(n).ring, cp(n).omega, n)
        assert ok and mat.shape == (n + 1, n + 1)
    mat, ok = poincare_graded_pairing(kt.ring, kt.omega, 1)
    assert ok and mat.shape == (1, 1) and not mat.is_zero()
    mat, ok = poincare_graded_pairing(kt.ring, kt.omega, 7)
    assert ok and mat.shape == (0, 0)


def test_symplectic_rejects_degenerate_class():
    with pytest.raises(InvalidRing, match="integrates to zero"):
        SymplecticData.of(torus(4), [1, 0, 0, 0, 0, 0])


def test_invariants_on_all_fixtures(cp):
    for s in all_symplectic(cp):
        ring, n = s.ring, s.half_dim
        check_ring(ring)
        v = s.module()
        filt = canonical_filtration(v)
        lo, hi = saturation_level(v, filt)
        assert lo + hi == ring.dim
        assert hard_lefschetz(s) == (lo == hi == n)
        assert weak_lefschetz(s) == (hi <= n + 1) == (lo >= n - 1)
        if hard_lefschetz(s):
            assert weak_lefschetz(s)
        for m in range(-1, ring.dim + 2):
            a, b, c = lef_fil_equiv_report(s, m, filt)
            assert a == b == c
            assert pairing_kills(ring, s.omega, m, filt)
            assert poincare_graded_pairing(ring, s.omega, m, filt)[1]
        assert is_bhom(poincare_hom(ring, s.omega))


def test_psi_sign_is_needed(kt):
    # without the sign the duality map is not e-equivariant
    phi = poincare_hom(kt.ring, kt.omega)
    unsigned = type(phi)(phi.source, phi.target, 0, {k: kt.ring.pairing_matrix(k).transpose()
                                                      for k in phi.source.weights})
    assert is_bhom(phi) and not is_bhom(unsigned)


def test_six_dimensional_criterion(cp):
    seen = set()
    for s in all_symplectic(cp):
        if s.ring.dim != 6:
            continue
        injective = rank(s.module().e(1)) == s.ring.betti[1]
        assert weak_lefschetz(s) == injective
        seen.add(injective)
    assert seen == {True, False}


def test_negative_controls(filiform):
    assert filiform.ring.betti == [1, 2, 3, 4, 3, 2, 1]
    assert not weak_lefschetz(filiform)
    assert (1, 1, 1, 4) in lefschetz_ranks(filiform.ring, filiform.omega, 2)
    assert rank(filiform.module().e(1)) == 1
    s = SymplecticData.of(cp3_sum_s1s5_s3s3(), "omega")
    assert sum(s.ring.betti) == 12
    assert not weak_lefschetz(s)
    assert failing_map(s.ring, s.omega, 4) == (1, 3, 0, 1)
