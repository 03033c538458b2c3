"""Exact matrix and polynomial algebra over Z and Z[u, v].

Characteristic polynomials come from a division-free Berkowitz recurrence,
so one code path serves integer and bivariate entries.  A second,
independent route through power traces and Newton's identities is kept as
an oracle for integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .bipoly import BiPoly
from .errors import InconsistencyError

INT = "int"
BIPOLY = "bipoly"

# power-trace cost grows like dim**4; the oracle is for small matrices only
TRACE_ORACLE_MAX_DIM = 40


def ring_of(entries: Iterable) -> str:
    ring = INT
    for e in entries:
        if isinstance(e, BiPoly):
            ring = BIPOLY
        elif not isinstance(e, int):
            raise TypeError(f"unsupported matrix entry type {type(e).__name__}")
    return ring


@dataclass(frozen=True)
class RingMatrix:
    """Square matrix with entries in Z or Z[u, v]."""

    rows: tuple[tuple, ...]
    ring: str = INT

    def __post_init__(self):
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise ValueError("RingMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: str | None = None) -> "RingMatrix":
        rows = tuple(tuple(r) for r in rows)
        detected = ring_of(e for r in rows for e in r)
        if ring is None:
            ring = detected
        elif ring == INT and detected == BIPOLY:
            raise TypeError("bivariate entries in an integer matrix")
        if ring == BIPOLY:
            rows = tuple(tuple(BiPoly.coerce(e) for e in r) for r in rows)
        return cls(rows, ring)

    @classmethod
    def identity(cls, n: int, scale=1) -> "RingMatrix":
        return cls.from_rows([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(tuple(zip(*self.rows)) if self.rows else (), self.ring)

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def minor(self, k: int) -> "RingMatrix":
        """Delete row k and column k."""
        return RingMatrix(
            tuple(r[:k] + r[k + 1:] for i, r in enumerate(self.rows) if i != k), self.ring
        )

    def scalar_minus(self, c) -> "RingMatrix":
        """cI - A."""
        n = self.dim
        return RingMatrix.from_rows(
            [[(c if i == j else 0) - self.rows[i][j] for j in range(n)] for i in range(n)],
            BIPOLY if isinstance(c, BiPoly) else self.ring,
        )

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        n = self.dim
        cols = list(zip(*other.rows))
        rows = []
        for i in range(n):
            row = self.rows[i]
            out = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(out)
        return RingMatrix.from_rows(rows, _join(self.ring, other.ring))

    def trace(self):
        acc = 0
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc


def _join(a: str, b: str) -> str:
    return BIPOLY if BIPOLY in (a, b) else INT


def kron_blocks(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Kronecker product of (possibly rectangular) nested sequences."""
    out = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return out


def kronecker(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Entry ((i,k),(j,l)) = a[i,j] * b[k,l], row-major block layout."""
    if a.ring != b.ring:
        raise TypeError(f"ring mismatch: {a.ring} vs {b.ring}")
    return RingMatrix.from_rows(kron_blocks(a.rows, b.rows), a.ring)


@dataclass(frozen=True)
class CharPoly:
    """Monic univariate polynomial in x with coefficients in Z or Z[u, v].

    ``coeffs[i]`` is the coefficient of ``x**(degree - i)`` in det(xI - A).
    The alternating-sign view ``a_i`` with P = x^N (1 - a_1/x + a_2/x^2 - ...)
    is available from :meth:`a_coefficients`.
    """

    coeffs: tuple
    ring: str = INT

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("CharPoly must be monic")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, ring: str | None = None) -> "CharPoly":
        coeffs = tuple(coeffs)
        if ring is None:
            ring = ring_of(coeffs)
        if ring == BIPOLY:
            coeffs = tuple(BiPoly.coerce(c) for c in coeffs)
        else:
            coeffs = tuple(c.constant() if isinstance(c, BiPoly) else int(c) for c in coeffs)
        return cls(coeffs, ring)

    @classmethod
    def one(cls) -> "CharPoly":
        return cls((1,), INT)

    @classmethod
    def x_power(cls, k: int) -> "CharPoly":
        return cls((1,) + (0,) * k, INT)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "CharPoly":
        p = cls.one()
        for r in roots:
            p = p * cls((1, -r), INT)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, xdeg: int):
        """Coefficient of x**xdeg."""
        if not 0 <= xdeg <= self.degree:
            return 0
        return self.coeffs[self.degree - xdeg]

    def a_coefficients(self) -> tuple:
        return tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        if not isinstance(other, CharPoly):
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return CharPoly.from_coeffs(out, _join(self.ring, other.ring))

    def shift(self, k: int) -> "CharPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("negative shift")
        return CharPoly(self.coeffs + (0,) * k if self.ring == INT
                        else self.coeffs + (BiPoly(),) * k, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def map_coeffs(self, fn) -> "CharPoly":
        return CharPoly.from_coeffs([fn(c) for c in self.coeffs])

    def specialize(self, u: int = 1, v: int = 1) -> "CharPoly":
        """Substitute integers for u and v."""
        if self.ring == INT:
            return self
        return CharPoly.from_coeffs([c.evaluate(u, v) for c in self.coeffs], INT)

    def zero_multiplicity(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            if c:
                break
            k += 1
        return k

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            d = self.degree - i
            if not c:
                continue
            xs = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if isinstance(c, BiPoly) and not c.is_constant():
                body = f"({c})" + (f"*{xs}" if xs else "")
                parts.append(("+", body))
                continue
            c = int(c.constant()) if isinstance(c, BiPoly) else c
            mag = abs(c)
            body = xs if (xs and mag == 1) else (f"{mag}*{xs}" if xs else str(mag))
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def to_json(self) -> dict:
        return poly_to_json(self.coeffs, var="x")

    @classmethod
    def from_json(cls, obj: dict) -> "CharPoly":
        return cls.from_coeffs(poly_from_json(obj))


def charpoly(a: RingMatrix) -> CharPoly:
    """det(xI - A) by the Berkowitz recurrence (no division anywhere)."""
    coeffs = kernels.berkowitz([list(r) for r in a.rows])
    return CharPoly.from_coeffs(coeffs, a.ring)


def power_traces(a: RingMatrix, kmax: int) -> list[int]:
    """[tr A, tr A^2, ..., tr A^kmax] for an integer matrix."""
    if a.ring != INT:
        raise TypeError("power traces are computed for integer matrices only")
    traces = []
    p = a
    for k in range(1, kmax + 1):
        if k > 1:
            p = p @ a
        traces.append(p.trace())
    return traces


def charpoly_via_traces(a: RingMatrix, max_dim: int = TRACE_ORACLE_MAX_DIM) -> CharPoly:
    """Characteristic polynomial from power traces through Newton's identities.

    Independent of :func:`charpoly`; used as a cross-check.  Every Newton
    step must land on an integer, otherwise something upstream is broken.
    """
    n = a.dim
    if n > max_dim:
        raise ValueError(f"trace oracle limited to dim <= {max_dim}, got {n}")
    p = power_traces(a, n)
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        ek = s / k
        if ek.denominator != 1:
            raise InconsistencyError(f"Newton step {k} produced non-integer {ek}")
        e.append(ek)
    return CharPoly.from_coeffs([(-1) ** k * int(ek) for k, ek in enumerate(e)], INT)


def det_bareiss(a: RingMatrix) -> int:
    if a.ring != INT:
        raise TypeError("det_bareiss needs an integer matrix")
    return kernels.bareiss_det([list(r) for r in a.rows])


def det_mod2(a: RingMatrix) -> int:
    if a.ring != INT:
        raise TypeError("det_mod2 needs an integer matrix")
    bitrows = []
    for r in a.rows:
        mask = 0
        for j, x in enumerate(r):
            if x & 1:
                mask |= 1 << j
        bitrows.append(mask)
    return kernels.det_gf2(bitrows, a.dim)


def bipoly_eval(p: CharPoly, x_value: BiPoly | int) -> BiPoly:
    """Substitute x := x_value and expand."""
    return BiPoly.coerce(p(BiPoly.coerce(x_value)))


def reciprocal_transform(g: BiPoly | int, du: int, dv: int) -> BiPoly:
    """u**du * v**dv * g(1/u, 1/v)."""
    g = BiPoly.coerce(g)
    if du < 0 or dv < 0 or du < g.degree_u or dv < g.degree_v:
        raise ValueError(
            f"exponents ({du}, {dv}) too small for degrees ({g.degree_u}, {g.degree_v})"
        )
    return BiPoly({(du - i, dv - j): c for (i, j), c in g.terms.items()})


# Polynomial JSON ---------------------------------------------------------

def bipoly_to_terms(p: BiPoly | int) -> list[dict]:
    p = BiPoly.coerce(p)
    return [{"u": i, "v": j, "c": str(c)} for (i, j), c in p.sorted_terms()]


def bipoly_from_terms(terms: list[dict]) -> BiPoly:
    return BiPoly({(int(t["u"]), int(t["v"])): int(t["c"]) for t in terms})


def poly_to_json(coeffs: Sequence, var: str | None = "x") -> dict:
    degree = len(coeffs) - 1
    out = []
    for i, c in enumerate(coeffs):
        if c:
            out.append({"xdeg": degree - i, "terms": bipoly_to_terms(c)})
    return {"var": var, "coeffs": out}


def poly_from_json(obj: dict) -> list:
    entries = obj["coeffs"]
    if not entries:
        return [0]
    degree = max(e["xdeg"] for e in entries)
    coeffs: list = [0] * (degree + 1)
    for e in entries:
        p = bipoly_from_terms(e["terms"])
        coeffs[degree - e["xdeg"]] = p.constant() if p.is_constant() else p
    return coeffs
