import math

import pytest

import elastica as el


def test_constants():
    assert abs(el.find_k0() - 0.9089085575485415) < 1e-14
    kstar, ustar = el.find_kstar()
    assert abs(kstar - 0.840946913229833) < 1e-13
    assert abs(ustar - 1.9537088999180007) < 1e-12


def test_exp_map_and_oracle():
    lam = el.Covector(0.3, 1.1, 1.0)
    q = el.exp_map(lam, 2.0)
    oq, olam, J = el.integrate_extremal(lam, 2.0)
    assert max(abs(a - b) for a, b in zip(q, oq)) < 1e-9
    assert abs(J - el.elastic_energy_closed(lam, 2.0)) < 1e-9
    assert el.stratify(lam) == el.Stratum.N1


def test_line_and_circle():
    x, y, theta = el.exp_map(el.Covector(0.0, 0.0, 0.0), 3.0)
    assert (x, y, theta) == (3.0, 0.0, 0.0)
    x, y, theta = el.exp_map(el.Covector(0.0, math.pi, 0.0), 1.0)
    assert abs(y - 2 / math.pi) < 1e-15


def test_maxwell():
    rep = el.cut_time_bound(el.Covector(0.0, 2.0, 0.0))
    assert rep.bound == pytest.approx(math.pi)
    m = el.in_maxwell(el.Covector(0.0, 1.0, 0.0), 2 * math.pi)
    assert set(m) == {el.MaxwellStratum.MAX1, el.MaxwellStratum.MAX3plus}


def test_bvp():
    assert not el.attainable(el.State(2.0, 0.0, 0.0), 1.0)
    res = el.bvp_shoot(el.State(0.0, 2 / math.pi, math.pi), 1.0, jobs=2)
    assert any(abs(s.lam.c - math.pi) < 1e-8 for s in res.solutions)


def test_errors():
    with pytest.raises(ValueError):
        el.exp_map(el.Covector(0.0, 1.0, 1.0), -1.0)
