"""Discrete periodic signals that carry a sampling rate.

Sums are treated as Riemann sums with step ``1/rate``, so convolution and
the DFT get a ``1/rate`` prefactor and the transform of a signal has rate
``n/rate``.  With this convention the convolution theorem holds without
stray factors.  The identity of convolution is ``rate`` at index 0.

Values are complex floats: roots of unity leave Q.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import DomainError
from .scalars import format_rational


@dataclass(frozen=True, eq=False)
class PeriodicSignal:
    rate: Fraction
    values: np.ndarray

    def __post_init__(self):
        rate = Fraction(self.rate)
        if rate <= 0:
            raise DomainError(f"sampling rate must be positive, got {rate}")
        values = np.array(self.values, dtype=np.complex128)
        if values.ndim != 1 or values.size < 1:
            raise DomainError("a periodic signal needs at least one value")
        values.setflags(write=False)
        object.__setattr__(self, "rate", rate)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self):
        return self.values.size

    def allclose(self, other: "PeriodicSignal", atol=1e-12) -> bool:
        """Same rate and length, values within ``atol * max(1, max|other|)``."""
        if self.rate != other.rate or self.n != other.n:
            return False
        scale = max(1.0, float(np.max(np.abs(other.values))))
        return bool(np.max(np.abs(self.values - other.values)) <= atol * scale)


def impulse(n: int, rate) -> PeriodicSignal:
    """Identity element of convolution: ``rate`` at index 0."""
    rate = Fraction(rate)
    v = np.zeros(n, dtype=np.complex128)
    v[0] = float(rate)
    return PeriodicSignal(rate, v)


def _check_compatible(x: PeriodicSignal, y: PeriodicSignal):
    if x.n != y.n:
        raise DomainError(f"period mismatch: {x.n} != {y.n}")
    if x.rate != y.rate:
        raise DomainError(f"rate mismatch: {x.rate} != {y.rate}")


def convolve(x: PeriodicSignal, y: PeriodicSignal) -> PeriodicSignal:
    _check_compatible(x, y)
    n = x.n
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    # out[k] = sum_j x[j] * y[k-j]
    out = (y.values[idx] * x.values[None, :]).sum(axis=1) / float(x.rate)
    return PeriodicSignal(x.rate, out)


def multiply(x: PeriodicSignal, y: PeriodicSignal) -> PeriodicSignal:
    _check_compatible(x, y)
    return PeriodicSignal(x.rate, x.values * y.values)


def _dft(x: PeriodicSignal, sign: int) -> PeriodicSignal:
    n = x.n
    jk = np.outer(np.arange(n), np.arange(n)) % n
    kernel = np.exp(sign * 2j * np.pi * jk / n)
    out = kernel @ x.values / float(x.rate)
    return PeriodicSignal(Fraction(n) / x.rate, out)


def dft_analysis(x: PeriodicSignal) -> PeriodicSignal:
    return _dft(x, -1)


def dft_synthesis(x: PeriodicSignal) -> PeriodicSignal:
    return _dft(x, +1)


def dilate(k: int, x: PeriodicSignal) -> PeriodicSignal:
    """``out[j] = sum of x[l] over l with l*k == j (mod n)``; unmatched slots stay zero."""
    n = x.n
    out = np.zeros(n, dtype=np.complex128)
    np.add.at(out, (np.arange(n) * k) % n, x.values)
    return PeriodicSignal(x.rate, out)


def poisson_gaussian(n: int, rate, wraps: int = 4) -> PeriodicSignal:
    """Sampled and periodised ``exp(-pi*t**2)``; an eigenvector of the DFT when ``n == rate**2``."""
    rate = Fraction(rate)
    j = np.arange(n)[:, None]
    m = np.arange(-wraps, wraps + 1)[None, :]
    t = (j + m * n) / float(rate)
    return PeriodicSignal(rate, np.exp(-np.pi * t**2).sum(axis=1))


# CSV ----------------------------------------------------------------------


def to_csv(x: PeriodicSignal) -> str:
    buf = io.StringIO()
    buf.write(f"# rate={format_rational(x.rate)}\n")
    buf.write("index,re,im\n")
    for j, v in enumerate(x.values):
        buf.write(f"{j},{float(v.real)!r},{float(v.imag)!r}\n")
    return buf.getvalue()


def from_csv(text: str | Iterable[str]) -> PeriodicSignal:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    rate = None
    rows = {}
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("rate="):
                rate = Fraction(body[len("rate="):].strip())
            continue
        if line.lower().startswith("index"):
            continue
        idx, re_, im_ = (s.strip() for s in line.split(","))
        rows[int(idx)] = complex(float(re_), float(im_))
    if rate is None:
        raise DomainError("missing '# rate=p/q' header")
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise DomainError("indices must be 0..n-1")
    return PeriodicSignal(rate, [rows[j] for j in range(n)])
