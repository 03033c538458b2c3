"""Closed-form spectra of paths and checkerboards, checked against exact results.

All floating-point work uses mpmath at ``WORKING_DPS`` decimal digits, well
beyond double precision, so products past 10**18 keep integer resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from mpmath import mp

from .algebra import CharPoly
from .graphs import checkerboard_charpoly

WORKING_DPS = 50

_MP = mp.clone()
_MP.dps = WORKING_DPS
ABS_FLOOR = _MP.mpf("1e-12")


@dataclass(frozen=True)
class SpectrumList:
    """Multiset of real eigenvalues, sorted descending."""

    values: tuple

    @classmethod
    def of(cls, values) -> "SpectrumList":
        return cls(tuple(sorted(values, reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_floats(self) -> list[float]:
        return [float(x) for x in self.values]


def _cos_ratio(j: int, d: int):
    # cospi gives exact zeros at half-integers
    return _MP.cospi(_MP.mpf(j) / d)


def path_eigenvalues(m: int) -> SpectrumList:
    """2 cos(j pi / (m+1)) for j = 1..m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return SpectrumList.of(2 * _cos_ratio(j, m + 1) for j in range(1, m + 1))


def checkerboard_product_spectrum(m: int, n: int) -> SpectrumList:
    """4 cos(j pi/(m+1)) cos(k pi/(n+1)) over all j, k: the spectrum of EC u OC."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    cm = [_cos_ratio(j, m + 1) for j in range(1, m + 1)]
    cn = [_cos_ratio(k, n + 1) for k in range(1, n + 1)]
    return SpectrumList.of(4 * a * b for a in cm for b in cn)


def expand_roots(roots: Sequence) -> list:
    """Coefficients of prod (x - r), highest degree first."""
    coeffs = [_MP.mpf(1)]
    for r in roots:
        nxt = coeffs + [_MP.mpf(0)]
        for i in range(1, len(nxt)):
            nxt[i] -= r * coeffs[i - 1]
        coeffs = nxt
    return coeffs


def relative_error(exact, approx):
    """|a - b| relative to the larger magnitude; absolute below 1e-12."""
    a, b = _MP.mpf(exact), _MP.mpf(approx)
    scale = max(abs(a), abs(b))
    diff = abs(a - b)
    return diff if scale < ABS_FLOOR else diff / scale


def max_coefficient_error(exact: CharPoly, approx: Sequence):
    if len(exact.coeffs) != len(approx):
        return _MP.inf
    return max((relative_error(e, a) for e, a in zip(exact.coeffs, approx)), default=_MP.zero)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    m: int
    n: int
    max_rel_err: float
    passed: bool

    def to_json(self) -> dict:
        return {"identity": self.identity, "m": self.m, "n": self.n,
                "max_rel_err": self.max_rel_err, "pass": self.passed}

    @classmethod
    def from_json(cls, obj: dict) -> "IdentityReport":
        return cls(obj["identity"], obj["m"], obj["n"], obj["max_rel_err"], obj["pass"])


EQ5_MAX_SIZE = 12


def verify_eq5(m: int, n: int, tol: float = 1e-9) -> IdentityReport:
    """Float-expanded cosine product vs the exact P(EC) P(OC)."""
    if max(m, n) > EQ5_MAX_SIZE:
        raise ValueError(f"eq5 check limited to m, n <= {EQ5_MAX_SIZE}")
    exact = checkerboard_charpoly(m, n, "even") * checkerboard_charpoly(m, n, "odd")
    # coefficients reach ~2^110 at 12 x 12; cancellation noise on the exact
    # zeros must stay below ABS_FLOOR, so precision grows with the root count
    with _MP.workdps(WORKING_DPS + m * n // 2):
        approx = expand_roots(checkerboard_product_spectrum(m, n).values)
        err = max_coefficient_error(exact, approx)
    return IdentityReport("eq5", m, n, float(err), bool(err <= tol))


def aztec_count_closed_form(n: int):
    """4^(2n-1) prod_{j,k<n} (4 - 4 c_j c_k)(4 + 4 c_j c_k), c_j = cos(j pi / 2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = [_cos_ratio(j, 2 * n) for j in range(1, n)]
    total = _MP.mpf(4) ** (2 * n - 1)
    for a in c:
        for b in c:
            t = 4 * a * b
            total *= (4 - t) * (4 + t)
    return total


def verify_eq8(n: int, exact: int | None = None, tol: float = 1e-6) -> IdentityReport:
    if exact is None:
        from .trees import spanning_tree_count_theorem2

        exact = spanning_tree_count_theorem2(2 * n + 1, 2 * n + 1, "odd")
    err = relative_error(exact, aztec_count_closed_form(n))
    return IdentityReport("eq8", 2 * n + 1, 2 * n + 1, float(err), bool(err <= tol))


@dataclass(frozen=True)
class ClosedFormSpectrum:
    nonzero_roots: SpectrumList
    zero_multiplicity: int

    @property
    def degree(self) -> int:
        return len(self.nonzero_roots) + self.zero_multiplicity

    def coefficients(self) -> list:
        return expand_roots(self.nonzero_roots.values) + [_MP.zero] * self.zero_multiplicity


def ec_odd_closed_form(m: int, n: int) -> ClosedFormSpectrum:
    """Roots of P(EC_{m,n}; x) for odd m, n in closed form.

    x^ceil(m/2) times prod over j <= m, k <= floor(n/2) of
    (x - 4 cos(j pi/(m+1)) cos(k pi/(n+1))); the j = (m+1)/2 factors are
    the extra zeros.
    """
    if m < 1 or n < 1 or m % 2 == 0 or n % 2 == 0:
        raise ValueError("m and n must be odd and >= 1")
    zero = (m + 1) // 2
    roots = []
    for j in range(1, m + 1):
        for k in range(1, n // 2 + 1):
            if j == (m + 1) // 2:
                zero += 1
            else:
                roots.append(4 * _cos_ratio(j, m + 1) * _cos_ratio(k, n + 1))
    return ClosedFormSpectrum(SpectrumList.of(roots), zero)


def verify_eq13(m: int, n: int, tol: float = 1e-9) -> IdentityReport:
    exact = checkerboard_charpoly(m, n, "even")
    err = max_coefficient_error(exact, ec_odd_closed_form(m, n).coefficients())
    return IdentityReport("eq13", m, n, float(err), bool(err <= tol))
