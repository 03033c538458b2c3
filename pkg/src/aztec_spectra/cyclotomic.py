"""Exact arithmetic in Z[w], w a primitive N-th root of unity, and the
Galois-orbit factorisation of Aztec diamond spanning-tree counts.

With c_a = w^a + w^-a = 2 cos(a pi / 2n) and N = 4n, the count for
OC_{2n+1,2n+1} is 4^(2n-1) times the product of 4 - s c_j c_k over
1 <= j, k <= n-1 and s = +1, -1.  Grouping those factors into classes closed
under w -> w^t (t coprime to N) makes every class product a rational integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from sympy import factorint, isprime

from .errors import InconsistencyError, NonRationalProductError

AZTEC_CAP = 8
CERTIFIED_BELOW = 2**64

# integer polynomials are tuples of coefficients, lowest degree first


def _trim(p: list[int]) -> tuple[int, ...]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod_monic(a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (0,), _trim(rem)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quo[i - db] = c
            for k in range(db + 1):
                rem[i - db + k] -= c * b[k]
    return _trim(quo), _trim(rem[:db] if db else [0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n, lowest degree first, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("N must be >= 1")
    num = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_polynomial(d))
            if any(rem):
                raise InconsistencyError(f"Phi_{d} does not divide x^{n} - 1")
    return num


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CycInt:
    """Element of Z[w] stored as its residue modulo Phi_N (length phi(N) vector)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        phi = cyclotomic_polynomial(order)
        d = len(phi) - 1
        c = list(coeffs)
        if len(c) > d:
            _, rem = _poly_divmod_monic(c, phi)
            c = list(rem)
        c += [0] * (d - len(c))
        self.order = order
        self.coeffs = tuple(c[:d])

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycInt":
        return cls(order, [value])

    @classmethod
    def root_power(cls, order: int, k: int) -> "CycInt":
        k %= order
        return cls(order, [0] * k + [1])

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = CycInt.from_int(self.order, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.order, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise NonRationalProductError(f"{self!r} is not rational")
        return self.coeffs[0]

    def conjugate(self, t: int) -> "CycInt":
        """Image under w -> w^t."""
        if gcd(t, self.order) != 1:
            raise ValueError("t must be coprime to the order")
        out = CycInt.from_int(self.order, 0)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + CycInt.root_power(self.order, k * t) * c
        return out

    def __repr__(self):
        return f"CycInt({self.order}, {list(self.coeffs)})"


def _check_factor_args(n: int, j: int, k: int, sign: int) -> None:
    if n < 2 or not (1 <= j <= n - 1 and 1 <= k <= n - 1):
        raise ValueError(f"indices ({j}, {k}) out of range 1..{n - 1}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def build_factor(n: int, j: int, k: int, sign: int) -> CycInt:
    """4 - sign (w^j + w^-j)(w^k + w^-k) with w of order 4n."""
    _check_factor_args(n, j, k, sign)
    order = 4 * n
    cj = CycInt.root_power(order, j) + CycInt.root_power(order, -j)
    ck = CycInt.root_power(order, k) + CycInt.root_power(order, -k)
    return 4 - (cj * ck) * sign


FactorIndex = tuple[int, int, int]


def _fold(a: int, n: int) -> tuple[int, int]:
    """Write c_a as s * c_b with 0 <= b <= n, using c_-a = c_a and c_{2n-a} = -c_a."""
    order = 4 * n
    a %= order
    if a > 2 * n:
        a = order - a
    if a > n:
        return 2 * n - a, -1
    return a, 1


def galois_image(idx: FactorIndex, t: int, n: int) -> FactorIndex:
    j, k, s = idx
    a, sa = _fold(j * t, n)
    b, sb = _fold(k * t, n)
    return a, b, s * sa * sb


def conjugate_orbits(n: int) -> list[tuple[FactorIndex, ...]]:
    """Partition the factor indices (j, k, sign) into Galois-closed classes.

    Classes are also closed under the swap (j, k) -> (k, j), which leaves the
    factor unchanged.  Returned sorted, each class sorted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    indices = [(j, k, s) for j in range(1, n) for k in range(1, n) for s in (1, -1)]
    parent = {i: i for i in indices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    units = [t for t in range(1, 4 * n) if gcd(t, 4 * n) == 1]
    for idx in indices:
        union(idx, (idx[1], idx[0], idx[2]))
        for t in units:
            img = galois_image(idx, t, n)
            if img not in parent:
                raise InconsistencyError(f"Galois image {img} of {idx} left the index set")
            union(idx, img)
    classes: dict = {}
    for idx in indices:
        classes.setdefault(find(idx), []).append(idx)
    return sorted(tuple(sorted(c)) for c in classes.values())


def orbit_product(orbit, n: int) -> int:
    """Exact product of the factors in one class; must be a rational integer."""
    acc = CycInt.from_int(4 * n, 1)
    for j, k, s in orbit:
        acc = acc * build_factor(n, j, k, s)
    if not acc.is_rational():
        raise NonRationalProductError(f"class {orbit} has non-rational product {acc!r}")
    return acc.rational_value()


@dataclass(frozen=True)
class Factorization:
    value: int
    primes: tuple[tuple[int, int], ...]
    probable: bool

    def product(self) -> int:
        return prod(p**e for p, e in self.primes)

    def __str__(self) -> str:
        if not self.primes:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.primes)

    def latex(self) -> str:
        if not self.primes:
            return "1"
        return r"\cdot ".join(f"{p}^{{{e}}}" if e > 1 else str(p) for p, e in self.primes)


def factor_integer(value: int) -> Factorization:
    """Complete prime factorisation.

    Factors below 2**64 are certified prime; larger ones are strong
    probable primes and set ``probable``.
    """
    if value < 1:
        raise ValueError("factor_integer needs a positive integer")
    fac = factorint(value)
    primes = tuple(sorted(fac.items()))
    probable = False
    for p, _ in primes:
        if not isprime(p):
            raise InconsistencyError(f"factor {p} is not prime")
        if p >= CERTIFIED_BELOW:
            probable = True
    out = Factorization(value, primes, probable)
    if out.product() != value:
        raise InconsistencyError("factorisation does not multiply back")
    return out


@dataclass(frozen=True)
class OrbitFactorization:
    n: int
    prefactor_exponent: int
    orbits: tuple[tuple[tuple[FactorIndex, ...], int], ...]
    total: int
    factorization: Factorization

    @property
    def prefactor(self) -> int:
        return 4**self.prefactor_exponent

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "prefactor": f"4^{self.prefactor_exponent}",
            "orbits": [
                {"indices": [[j, k, "+" if s > 0 else "-"] for j, k, s in idx],
                 "product": str(p)}
                for idx, p in self.orbits
            ],
            "total": str(self.total),
            "primes": [[str(p), e] for p, e in self.factorization.primes],
            "probable": self.factorization.probable,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OrbitFactorization":
        exp = int(obj["prefactor"].split("^")[1])
        orbits = tuple(
            (tuple((j, k, 1 if s == "+" else -1) for j, k, s in o["indices"]), int(o["product"]))
            for o in obj["orbits"]
        )
        total = int(obj["total"])
        fac = Factorization(total, tuple((int(p), e) for p, e in obj["primes"]), obj["probable"])
        return cls(obj["n"], exp, orbits, total, fac)


def factor_aztec_count(n: int, cap: int = AZTEC_CAP, exact: int | None = None) -> OrbitFactorization:
    """Assemble the tree count of OC_{2n+1,2n+1} from orbit products.

    The result is checked against the exact count (theorem-2 route unless
    ``exact`` is supplied) and a mismatch raises.
    """
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}")
    orbits = tuple((o, orbit_product(o, n)) for o in conjugate_orbits(n))
    total = 4 ** (2 * n - 1) * prod(p for _, p in orbits)
    if exact is None:
        from .trees import spanning_tree_count_theorem2

        exact = spanning_tree_count_theorem2(2 * n + 1, 2 * n + 1, "odd")
    if total != exact:
        raise InconsistencyError(f"orbit total {total} != exact count {exact}")
    return OrbitFactorization(n, 2 * n - 1, orbits, total, factor_integer(total))
