"""Polynomials in two commuting variables ``u`` and ``v`` over the integers."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, int]


class BiPoly:
    """Immutable element of Z[u, v].

    Terms are kept as a mapping ``(deg_u, deg_v) -> coefficient`` with no
    zero coefficients.  Plain Python ints mix freely with BiPoly in
    arithmetic, so ring-generic code can start from ``0`` and ``1``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = int(c)
            if c:
                key = (int(i), int(j))
                c = clean.get(key, 0) + c
                if c:
                    clean[key] = c
                else:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def u(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def v(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def coerce(cls, value: "BiPoly | int") -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to BiPoly")

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded lexicographic order: total degree, then deg_u."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    @property
    def degree_u(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_v(self) -> int:
        return max((j for _, j in self._terms), default=0)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {i + j for i, j in self._terms}
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant(self) -> int:
        return self._terms.get((0, 0), 0)

    def evaluate(self, u, v):
        total = 0
        for (i, j), c in self._terms.items():
            total += c * u**i * v**j
        return total

    def swap(self) -> "BiPoly":
        """Exchange the roles of u and v."""
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    # ring operations

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "BiPoly":
        return self

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, int):
            if not other:
                return self
            other = BiPoly.const(other)
        elif not isinstance(other, BiPoly):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return _raw(terms)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        if isinstance(other, (int, BiPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "BiPoly":
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            if not other:
                return _raw({})
            return _raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("BiPoly exponents must be nonnegative integers")
        result = BiPoly.const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in reversed(self.sorted_terms()):
            mono = "*".join(
                s for s in (_power("u", i), _power("v", j)) if s
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for (i, j), c in reversed(self.sorted_terms()):
            mono = _latex_power("u", i) + _latex_power("v", j)
            mag = abs(c)
            body = mono if (mono and mag == 1) else f"{mag}{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += ("-" if c < 0 else "+") + body
        return out


def _raw(terms: dict[Monomial, int]) -> BiPoly:
    # terms already free of zero coefficients
    p = BiPoly.__new__(BiPoly)
    p._terms = terms
    p._hash = None
    return p


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _latex_power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{{{e}}}"


U = BiPoly.u()
V = BiPoly.v()
