import json

import numpy as np
import pytest

from holowind import (
    BoundarySamples,
    ComplexPolynomial,
    LaurentExpression,
    circle_grid,
    dft,
    l1_tail,
    resample,
    sample,
    truncated_eval,
)
from holowind.boundary import synthesize_grid

from conftest import make_laurent

FAMILY = LaurentExpression(((3, 1.0), (-1, 0.5)))  # z^3 + 0.5/z


def test_sample_monomial():
    s = sample(LaurentExpression(((2, 1.0),)), 16)
    expected = np.exp(4j * np.pi * np.arange(16) / 16)
    assert np.allclose(s.values, expected, atol=1e-14)


def test_sample_family_at_one():
    s = sample(FAMILY, 64)
    assert s.values[0] == pytest.approx(1.5)


def test_sample_constant():
    s = sample(LaurentExpression(((0, 5.0),)), 16)
    assert np.allclose(s.values, 5.0)


@pytest.mark.parametrize("n", [0, 8, 15, 100, 1 << 21])
def test_sample_invalid_count(n):
    with pytest.raises(ValueError):
        sample(FAMILY, n)


def test_samples_must_be_finite():
    v = np.ones(16, dtype=complex)
    v[3] = np.nan
    with pytest.raises(ValueError):
        BoundarySamples(v)


def test_dft_monomial():
    c = dft(sample(LaurentExpression(((2, 1.0),)), 32))
    assert c.get(2) == pytest.approx(1.0, abs=1e-12)
    others = [c.get(k) for k in range(c.k_min, c.k_max + 1) if k != 2]
    assert max(abs(x) for x in others) < 1e-12


def test_dft_family():
    c = dft(sample(FAMILY, 64))
    assert c.get(3) == pytest.approx(1.0, abs=1e-12)
    assert c.get(-1) == pytest.approx(0.5, abs=1e-12)


def test_dft_conjugate_z():
    grid = circle_grid(32)
    c = dft(BoundarySamples(np.conj(grid)))
    assert c.get(-1) == pytest.approx(1.0, abs=1e-12)


def test_truncated_eval_single_band():
    c = dft(sample(LaurentExpression(((2, 1.0),)), 32))
    assert truncated_eval(c, 2, 2, 1.0) == pytest.approx(1.0, abs=1e-12)


def test_truncated_eval_negative_band():
    c = dft(sample(FAMILY, 64))
    assert truncated_eval(c, -1, -1, 1j) == pytest.approx(0.5 * (-1j), abs=1e-12)


def test_truncated_eval_empty_band():
    c = dft(sample(FAMILY, 64))
    assert truncated_eval(c, 3, 2, 1.0) == 0


def test_truncated_eval_out_of_band():
    c = dft(sample(FAMILY, 64))
    with pytest.raises(ValueError):
        truncated_eval(c, -40, 2, 1.0)


def test_l1_tail_values():
    c2 = dft(sample(LaurentExpression(((2, 1.0),)), 32))
    assert l1_tail(c2, 2) == pytest.approx(0.0, abs=1e-12)
    cf = dft(sample(FAMILY, 64))
    assert l1_tail(cf, 1) == pytest.approx(1.0, abs=1e-12)
    assert l1_tail(cf, 3) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        l1_tail(cf, -1)


def test_full_band_roundtrip():
    rng = np.random.default_rng(7)
    for _ in range(10):
        expr = make_laurent(rng)
        s = sample(expr, 64)
        back = synthesize_grid(s.coeffs)
        scale = max(np.max(np.abs(s.values)), 1e-30)
        assert np.max(np.abs(back - s.values)) < 1e-10 * scale
        # spot-check against the explicit band sum as well
        c = s.coeffs
        grid = circle_grid(64)
        for j in (0, 5, 33):
            val = truncated_eval(c, c.k_min, c.k_max, grid[j])
            assert abs(val - s.values[j]) < 1e-10 * scale


def test_dft_linearity():
    rng = np.random.default_rng(11)
    for _ in range(10):
        f = sample(make_laurent(rng), 64)
        g = sample(make_laurent(rng), 64)
        a = complex(rng.normal(), rng.normal())
        b = complex(rng.normal(), rng.normal())
        combo = BoundarySamples(a * f.values + b * g.values)
        lhs = dft(combo).c
        rhs = a * dft(f).c + b * dft(g).c
        assert np.max(np.abs(lhs - rhs)) < 1e-12 * max(1.0, np.max(np.abs(rhs)))


def test_dft_shift():
    rng = np.random.default_rng(13)
    for _ in range(5):
        expr = make_laurent(rng)
        f = sample(expr, 64)
        zf = sample(expr.shifted(1), 64)
        cf, czf = dft(f), dft(zf)
        for k in range(czf.k_min + 1, czf.k_max + 1):
            assert abs(czf.get(k) - cf.get(k - 1)) < 1e-12 * max(1.0, abs(cf.get(k - 1)))


def test_parseval():
    rng = np.random.default_rng(17)
    for _ in range(10):
        s = sample(make_laurent(rng), 128)
        lhs = s.coeffs.energy()
        rhs = float(np.mean(np.abs(s.values) ** 2))
        assert lhs == pytest.approx(rhs, rel=1e-9)


def test_json_sample_roundtrip(tmp_path):
    s = sample(FAMILY, 64, label="family")
    path = tmp_path / "family.json"
    s.save(path)
    doc = json.loads(path.read_text())
    assert doc["n"] == 64
    assert len(doc["values"]) == 64
    assert doc["label"] == "family"
    back = BoundarySamples.load(path)
    assert np.array_equal(back.values, s.values)
    assert back.label == "family"


@pytest.mark.parametrize("doc", [
    [],
    {},
    {"n": 64},
    {"n": "64", "values": []},
    {"n": 16, "values": [[1.0]] * 16},
    {"n": 16, "values": [[1.0, 0.0]] * 8},
])
def test_sample_schema_rejection(doc):
    with pytest.raises(ValueError):
        BoundarySamples.from_json(doc)


def test_polynomial_trimming():
    p = ComplexPolynomial([1.0, 2.0, 1e-16])
    assert p.degree == 1
    z = ComplexPolynomial([0.0, 0.0])
    assert z.is_zero and z.degree == -1


def test_polynomial_algebra():
    p = ComplexPolynomial([1, 1])
    q = ComplexPolynomial([-1, 1])
    assert np.allclose((p * q).coeffs, [-1, 0, 1])
    assert np.allclose((p + q).coeffs, [0, 2])
    assert (2 * p)(3.0) == pytest.approx(8.0)


def test_resample_band_limited_exact():
    s = sample(FAMILY, 64)
    up = resample(s, 256)
    expected = sample(FAMILY, 256)
    assert np.max(np.abs(up.values - expected.values)) < 1e-12
