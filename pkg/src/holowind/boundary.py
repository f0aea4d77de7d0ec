"""Functions on the unit circle: sampling, Fourier analysis, coefficient algebra.

Conventions used everywhere in the package:

* sample grid: z_j = exp(2*pi*i*j/N), j = 0..N-1, counterclockwise;
* every contour integral is the trapezoid rule on this grid;
* Fourier normalization c_k = (1/2pi) * integral of f(e^{i theta}) e^{-ik theta},
  so that c_{-1}(f) = (1/2pi*i) * integral of f(z) dz over the circle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

MIN_SAMPLES = 16
MAX_SAMPLES = 1 << 20
DEFAULT_SAMPLES = 1024
TRIM_REL = 1e-14


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def circle_grid(n: int) -> np.ndarray:
    """The grid exp(2*pi*i*j/n), j ascending."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def _check_sample_count(n: int) -> None:
    if n < MIN_SAMPLES or not is_power_of_two(n):
        raise ValueError(
            f"sample count must be a power of two >= {MIN_SAMPLES}, got {n}"
        )
    if n > MAX_SAMPLES:
        raise ValueError(f"sample count exceeds the cap {MAX_SAMPLES}, got {n}")


def _cpair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


@dataclass(frozen=True)
class BoundarySamples:
    """Uniform samples f(exp(2*pi*i*j/N)), j = 0..N-1."""

    values: np.ndarray
    label: str | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.ndim != 1:
            raise ValueError("values must be one-dimensional")
        _check_sample_count(v.size)
        if not np.all(np.isfinite(v)):
            raise ValueError("sample values must be finite")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.size

    @cached_property
    def rms(self) -> float:
        """Root mean square of |f| on the grid (the tolerance normalizer)."""
        return float(np.sqrt(np.mean(np.abs(self.values) ** 2)))

    @cached_property
    def coeffs(self) -> "FourierCoefficients":
        return dft(self)

    def to_json(self) -> dict:
        doc = {"n": self.n, "values": [_cpair(z) for z in self.values]}
        if self.label is not None:
            doc["label"] = self.label
        return doc

    @classmethod
    def from_json(cls, doc) -> "BoundarySamples":
        if not isinstance(doc, dict):
            raise ValueError("sample file must be a JSON object")
        n = doc.get("n")
        values = doc.get("values")
        if not isinstance(n, int):
            raise ValueError("field 'n' must be an integer")
        if not isinstance(values, list) or len(values) != n:
            raise ValueError("field 'values' must be a list of length n")
        try:
            arr = np.array([complex(re, im) for re, im in values])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"malformed 'values' entry: {exc}") from None
        label = doc.get("label")
        if label is not None and not isinstance(label, str):
            raise ValueError("field 'label' must be a string")
        return cls(arr, label=label)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "BoundarySamples":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class FourierCoefficients:
    """Two-sided coefficients c_k for k in [-n/2, n/2), stored ascending in k."""

    c: np.ndarray
    n: int

    def __post_init__(self):
        c = np.asarray(self.c, dtype=np.complex128).copy()
        if c.size != self.n:
            raise ValueError("coefficient array must have length n")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def k_min(self) -> int:
        return -(self.n // 2)

    @property
    def k_max(self) -> int:
        return self.n // 2 - 1

    def get(self, k: int) -> complex:
        if k < self.k_min or k > self.k_max:
            raise KeyError(f"frequency {k} outside stored band [{self.k_min}, {self.k_max}]")
        return complex(self.c[k - self.k_min])

    def band(self, k_lo: int, k_hi: int) -> np.ndarray:
        return self.c[k_lo - self.k_min : k_hi - self.k_min + 1]

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1)

    def energy(self) -> float:
        return float(np.sum(np.abs(self.c) ** 2))


def dft(samples: BoundarySamples) -> FourierCoefficients:
    """c_k = (1/N) sum_j values[j] exp(-2*pi*i*k*j/N), k in [-N/2, N/2)."""
    n = samples.n
    raw = np.fft.fft(samples.values) / n
    return FourierCoefficients(np.fft.fftshift(raw), n)


def truncated_eval(coeffs: FourierCoefficients, k_lo: int, k_hi: int, point) -> complex:
    """Sum of c_k * point**k over the band [k_lo, k_hi]; empty band gives 0."""
    if k_lo > k_hi:
        return 0j
    if k_lo < coeffs.k_min or k_hi > coeffs.k_max:
        raise ValueError(
            f"band [{k_lo}, {k_hi}] outside stored range [{coeffs.k_min}, {coeffs.k_max}]"
        )
    ks = np.arange(k_lo, k_hi + 1)
    return complex(np.sum(coeffs.band(k_lo, k_hi) * np.asarray(point, complex) ** ks))


def l1_tail(coeffs: FourierCoefficients, m: int) -> float:
    """Sum of |c_k| over |k| > m: a certified sup-norm bound for the tail."""
    if m < 0:
        raise ValueError("m must be >= 0")
    mask = np.abs(coeffs.frequencies) > m
    return float(np.sum(np.abs(coeffs.c[mask])))


def synthesize_grid(coeffs: FourierCoefficients) -> np.ndarray:
    """Evaluate the full band on the sample grid (inverse transform)."""
    return np.fft.ifft(np.fft.ifftshift(coeffs.c)) * coeffs.n


@dataclass(frozen=True)
class ComplexPolynomial:
    """Coefficients a_0..a_d, lowest degree first, high end trimmed at 1e-14 relative."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128)).copy()
        if a.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if a.size == 0:
            a = np.zeros(1, dtype=np.complex128)
        peak = np.max(np.abs(a))
        if peak > 0:
            keep = np.abs(a) > TRIM_REL * peak
            last = int(np.max(np.nonzero(keep)[0])) if keep.any() else -1
            a = a[: last + 1] if last >= 0 else np.zeros(1, dtype=np.complex128)
        else:
            a = np.zeros(1, dtype=np.complex128)
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def zero(cls) -> "ComplexPolynomial":
        return cls(np.zeros(1))

    @classmethod
    def monomial(cls, k: int, coefficient: complex = 1.0) -> "ComplexPolynomial":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        a = np.zeros(k + 1, dtype=np.complex128)
        a[k] = coefficient
        return cls(a)

    @classmethod
    def from_roots(cls, roots, leading: complex = 1.0) -> "ComplexPolynomial":
        a = np.array([leading], dtype=np.complex128)
        for r in np.asarray(roots, dtype=np.complex128):
            a = np.convolve(a, np.array([-r, 1.0], dtype=np.complex128))
        return cls(a)

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else self.coeffs.size - 1

    def __call__(self, z):
        acc = np.full_like(np.asarray(z, dtype=np.complex128), self.coeffs[-1])
        for c in self.coeffs[-2::-1]:
            acc = acc * z + c
        return acc if acc.ndim else complex(acc)

    def __add__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        m = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(m, dtype=np.complex128)
        a[: self.coeffs.size] += self.coeffs
        a[: other.coeffs.size] += other.coeffs
        return ComplexPolynomial(a)

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        return self + (-other)

    def __neg__(self) -> "ComplexPolynomial":
        return ComplexPolynomial(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(np.convolve(self.coeffs, other.coeffs))
        return ComplexPolynomial(self.coeffs * complex(other))

    __rmul__ = __mul__

    def shifted(self, k: int) -> "ComplexPolynomial":
        """Multiply by z**k, k >= 0."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        return ComplexPolynomial(np.concatenate([np.zeros(k), self.coeffs]))

    def derivative(self) -> "ComplexPolynomial":
        if self.coeffs.size == 1:
            return ComplexPolynomial.zero()
        return ComplexPolynomial(self.coeffs[1:] * np.arange(1, self.coeffs.size))

    def coefficient_pairs(self) -> list:
        return [_cpair(complex(a)) for a in self.coeffs]


@dataclass(frozen=True)
class LaurentExpression:
    """Finite sum of c * z**m with integer (possibly negative) exponents m."""

    terms: tuple

    def __post_init__(self):
        cleaned = {}
        for m, c in self.terms:
            c = complex(c)
            if c != 0:
                cleaned[int(m)] = cleaned.get(int(m), 0j) + c
        items = tuple(sorted((m, c) for m, c in cleaned.items() if c != 0))
        object.__setattr__(self, "terms", items)

    @classmethod
    def from_dict(cls, mapping: Mapping[int, complex]) -> "LaurentExpression":
        return cls(tuple(mapping.items()))

    @classmethod
    def from_polynomial(cls, p: ComplexPolynomial) -> "LaurentExpression":
        return cls(tuple(enumerate(p.coeffs)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int:
        return min((m for m, _ in self.terms), default=0)

    @property
    def max_exponent(self) -> int:
        return max((m for m, _ in self.terms), default=0)

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        acc = np.zeros_like(z)
        for m, c in self.terms:
            acc = acc + c * z**m
        return acc if acc.ndim else complex(acc)

    def __add__(self, other: "LaurentExpression") -> "LaurentExpression":
        merged = self.as_dict()
        for m, c in other.terms:
            merged[m] = merged.get(m, 0j) + c
        return LaurentExpression.from_dict(merged)

    def __mul__(self, other):
        if isinstance(other, LaurentExpression):
            prod: dict = {}
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    prod[m1 + m2] = prod.get(m1 + m2, 0j) + c1 * c2
            return LaurentExpression(tuple(prod.items()))
        return LaurentExpression(tuple((m, c * complex(other)) for m, c in self.terms))

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LaurentExpression":
        """Multiply by z**k (k of either sign)."""
        return LaurentExpression(tuple((m + k, c) for m, c in self.terms))


def sample(expr: LaurentExpression, n: int, label: str | None = None) -> BoundarySamples:
    """Evaluate a Laurent expression on the n-point circle grid."""
    _check_sample_count(n)
    return BoundarySamples(expr(circle_grid(n)), label=label)


def resample(samples: BoundarySamples, n2: int) -> BoundarySamples:
    """Band-limited upsampling of the trigonometric interpolant to n2 points."""
    n = samples.n
    if n2 == n:
        return samples
    _check_sample_count(n2)
    if n2 < n:
        raise ValueError("can only refine to a larger grid")
    raw = np.fft.fft(samples.values) / n
    half = n // 2
    padded = np.zeros(n2, dtype=np.complex128)
    padded[:half] = raw[:half]
    padded[n2 - half :] = raw[half:]
    return BoundarySamples(np.fft.ifft(padded) * n2, label=samples.label)
