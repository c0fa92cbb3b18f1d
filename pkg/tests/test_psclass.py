import json

import pytest

from bentforge.boolfun import BooleanFunction, is_bent, zero_function
from bentforge.construct import mm_bent
from bentforge.gf2 import intersect
from bentforge.psclass import (
    _shifted_affine,
    is_in_ps_sharp,
    is_partial_spread,
    ps_ap,
    ps_candidates,
)
from bentforge.vectorial import identity_map


def balanced_h3() -> BooleanFunction:
    return BooleanFunction(3, [0, 1, 1, 0, 1, 0, 1, 0])


def test_ps_ap_is_ps_minus_bent():
    f = ps_ap(3, balanced_h3())
    assert is_bent(f)
    assert f.weight() == 2**5 - 2**2
    w = is_partial_spread(f)
    assert w is not None
    assert w.subclass == "PS_minus"
    assert len(w.subspaces) == 4


def test_ps_ap_rejects_bad_h():
    with pytest.raises(ValueError):
        ps_ap(3, BooleanFunction(3, [1, 0, 1, 0, 1, 0, 1, 0]))  # h(0) = 1
    with pytest.raises(ValueError):
        ps_ap(3, BooleanFunction(3, [0, 1, 1, 1, 1, 0, 1, 0]))  # unbalanced


def test_witness_soundness():
    f = ps_ap(3, balanced_h3())
    w = is_partial_spread(f)
    assert w.reconstruct(6) == f
    # pairwise trivial intersections
    for i, a in enumerate(w.subspaces):
        for b in w.subspaces[i + 1 :]:
            assert intersect(a, b).dim == 0


def test_ps_plus_complement_control():
    # complementing a PS- function on the nonzero support pattern of the
    # plus class: f + 1 has f(0) = 1 and weight 2^(n-1) + 2^(n/2-1)
    f = ps_ap(3, balanced_h3())
    g = f ^ 1
    w = is_partial_spread(g)
    # g = sum of indicators of the complementary spread lines
    assert w is not None
    assert w.subclass == "PS_plus"
    assert w.reconstruct(6) == g


def test_is_partial_spread_rejects_non_bent():
    with pytest.raises(ValueError):
        is_partial_spread(zero_function(4))


def test_quadratic_not_partial_spread_directly():
    f = mm_bent(identity_map(3), zero_function(3))
    assert is_partial_spread(f) is None


def test_ps_sharp_identity_offset():
    f = ps_ap(3, balanced_h3())
    w = is_in_ps_sharp(f)
    assert w is not None
    assert (w.shift, w.affine, w.constant) == (0, 0, 0)


def test_ps_sharp_finds_disguise():
    f = ps_ap(3, balanced_h3())
    g = _shifted_affine(f, 0b100101, 0b010011, 1)
    w = is_in_ps_sharp(g)
    assert w is not None
    moved = _shifted_affine(g, w.shift, w.affine, w.constant)
    assert w.inner.reconstruct(6) == moved


def test_ps_sharp_consistency_audit(rng):
    # a sweep that returns none must agree with direct spot checks
    f = mm_bent(identity_map(3), zero_function(3))
    result = is_in_ps_sharp(f)
    assert result is None
    for _ in range(100):
        b, a, c = rng.randrange(64), rng.randrange(64), rng.randrange(2)
        g = _shifted_affine(f, b, a, c)
        assert is_partial_spread(g) is None


def test_ps_sharp_checkpoint_resume(tmp_path):
    f = mm_bent(identity_map(3), zero_function(3))
    path = tmp_path / "sweep.json"
    assert is_in_ps_sharp(f, resume=path) is None
    data = json.loads(path.read_text())
    assert data["finished"] and data["witness"] is None
    # a finished checkpoint short-circuits the whole sweep
    assert is_in_ps_sharp(f, resume=path) is None
    # a fresh partial checkpoint resumes mid-sweep
    path.write_text(json.dumps({"digest": f.digest(), "next_b": 60, "finished": False, "witness": None}))
    assert is_in_ps_sharp(f, resume=path) is None


def test_ps_sharp_jobs_match_serial():
    f = ps_ap(3, balanced_h3())
    g = _shifted_affine(f, 3, 5, 0)
    serial = is_in_ps_sharp(g)
    parallel = is_in_ps_sharp(g, jobs=2)
    assert (serial is None) == (parallel is None)
    if serial is not None:
        assert (serial.shift, serial.affine) == (parallel.shift, parallel.affine)


def test_candidate_filter_counts():
    f = ps_ap(3, balanced_h3())
    cands = ps_candidates(f)
    # the defining spread lines are all candidates
    assert len(cands) >= 4
