import pytest
from hypothesis import given, settings, strategies as st

from lefrank.cohomology import SymplecticData, hard_lefschetz, weak_lefschetz
from lefrank.constructions import blowup_bmodule, catalog, projective_space, symplectic_nilmanifold, torus
from lefrank.filtration import canonical_filtration, saturation_level
from lefrank.modules import random_bmodule
from lefrank.spectral import (LALONDE_MCDUFF, FibrationSpec, certify_csplitting, convolve, e2_page, gap_certificate,
                              schur_report)

from rings import cp3_sum_s1s5_s3s3


def fibers(cp, kt, filiform):
    out = [cp(n) for n in range(4)] + [kt, filiform, SymplecticData.of(torus(2), "e12")]
    out += [symplectic_nilmanifold(catalog(n)) for n in ("n6-0-0-0-0-12-13", "n6-0-0-0-12-13-23", "kt-x-t2")]
    out.append(SymplecticData.of(cp3_sum_s1s5_s3s3(), "omega"))
    return out


BASES = [(1,), (1, 0, 1), (1, 0, 2, 0, 1), (1, 2, 1), (1, 1, 1, 1), (1, 3, 3, 1)]


def test_e2_page_examples(cp, kt):
    assert e2_page(FibrationSpec(kt, (1,))) == kt.module()
    m = e2_page(FibrationSpec(cp(1), (1, 0, 1)))
    assert dict(m.dims) == {0: 2, 2: 2}
    e2 = e2_page(FibrationSpec(kt, (1, 0, 2, 0, 1)))
    assert e2.total_dim == 48
    assert saturation_level(e2) == (1, 3)


def test_gap_certificate_examples(cp, kt):
    assert gap_certificate(cp(3).module(), 2).certified
    c = gap_certificate(kt.module(), 4)
    assert c.certified and (c.lo, c.hi) == (1, 3)
    assert not gap_certificate(kt.module(), 2).certified
    assert not gap_certificate(kt.module(), 3).certified
    with pytest.raises(ValueError):
        gap_certificate(kt.module(), 1)


def test_certify_cp2():
    s = SymplecticData.of(projective_space(2), "h")
    c = certify_csplitting(FibrationSpec(s, (1, 0, 1)))
    assert c.certified and c.r0 == 2 and c.route == "hard-lefschetz"
    assert c.axioms == ()
    assert c.total_betti == (1, 0, 2, 0, 2, 0, 1)


def test_certify_kt(kt):
    for base in BASES:
        c = certify_csplitting(FibrationSpec(kt, base))
        assert c.certified and c.r0 == 4 and c.route == "weak-lefschetz"
        assert c.axioms == (LALONDE_MCDUFF,)
        assert any("ASSUMED" in line for line in c.reason)
        assert c.total_betti == convolve(kt.ring.betti, base)


def test_kt_blowup_gap(kt):
    c = gap_certificate(blowup_bmodule(kt, 5, 3), 4)
    assert c.certified and c.hi - c.lo == 2
    assert not gap_certificate(blowup_bmodule(kt, 5, 3), 3).certified


def test_negative_controls(filiform):
    c = certify_csplitting(FibrationSpec(filiform, (1, 0, 1)))
    assert not c.certified and c.route == "none" and c.total_betti is None
    assert "total_betti" not in c.to_json()
    assert any("omega^1: H^3 -> H^5" in line for line in c.reason)
    s = SymplecticData.of(cp3_sum_s1s5_s3s3(), "omega")
    c = certify_csplitting(FibrationSpec(s, (1, 2, 1)))
    assert not c.certified
    assert any("omega^1: H^3 -> H^5 has rank 0 < 1" in line for line in c.reason)


def test_forced_start_page(kt, cp):
    assert not certify_csplitting(FibrationSpec(kt, (1, 0, 1), 2)).certified
    c = certify_csplitting(FibrationSpec(kt, (1, 0, 1), 4))
    assert c.certified and LALONDE_MCDUFF in c.axioms
    assert certify_csplitting(FibrationSpec(cp(2), (1, 0, 1), 2)).axioms == ()
    with pytest.raises(ValueError):
        certify_csplitting(FibrationSpec(kt, (1,), 5))


def test_truncated_base(cp):
    # BS^1 = CP^infinity, cut off after degree 4
    c = certify_csplitting(FibrationSpec(cp(1), (1, 0, 1, 0, 1), base_truncated=True))
    assert c.certified and c.base_truncated
    assert c.total_betti == (1, 0, 2, 0, 2)
    assert c.to_json()["base_truncated"] is True


def test_spec_validation(kt):
    with pytest.raises(ValueError):
        FibrationSpec(kt, (2, 0, 1))
    with pytest.raises(ValueError):
        FibrationSpec(kt, ())


def test_schur_report_examples(cp, kt):
    for r in (2, 3, 5):
        rep = schur_report(cp(2).module(), r)
        assert len(rep) == 1 and rep[0]["forced_zero"]
    rep = {row["level"]: row for row in schur_report(kt.module(), 2)}
    assert rep[2]["target_level"] == 1 and 0 in rep[2]["source"] and rep[2]["target"] == {0: 1}
    assert not rep[2]["forced_zero"]
    assert all(row["forced_zero"] for row in schur_report(kt.module(), 4))


def test_route_soundness_and_identities(cp, kt, filiform):
    for s in fibers(cp, kt, filiform):
        lo, hi = saturation_level(s.module())
        for base in BASES:
            c = certify_csplitting(FibrationSpec(s, base))
            assert (c.route == "hard-lefschetz") == (lo == hi) == hard_lefschetz(s)
            assert (c.route == "weak-lefschetz") == (hi - lo in (1, 2) and weak_lefschetz(s))
            f2 = canonical_filtration(e2_page(FibrationSpec(s, base)))
            assert (f2.lo, f2.hi) == (lo, hi)
            if not c.certified:
                continue
            fb, bb = s.ring.betti, base
            assert c.total_betti == convolve(fb, bb)
            assert sum(c.total_betti) == sum(fb) * sum(bb)
            euler = lambda xs: sum((-1) ** i * x for i, x in enumerate(xs))
            assert euler(c.total_betti) == euler(fb) * euler(bb)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_gap_monotone(seed):
    v = random_bmodule(seed, 8, 10)
    verdicts = [gap_certificate(v, r).certified for r in range(2, 12)]
    for a, b in zip(verdicts, verdicts[1:]):
        assert b or not a
