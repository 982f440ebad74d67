"""Truncated power series in ``t`` whose coefficients are polynomials in ``q``.

Everything is exact integer arithmetic. A :class:`TSeries` carries its own
truncation order; combining series of different orders raises instead of
silently re-truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class OrderMismatch(ValueError):
    pass


class QPoly:
    """Polynomial in ``q`` with integer coefficients and nonnegative exponents.

    Stored as a mapping ``exponent -> coefficient`` with zero coefficients
    dropped. Instances are treated as immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative q-exponent {e}")
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> "QPoly":
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly.constant(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``; ``k`` may be negative if no exponent drops below zero."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def lowest(self) -> int:
        return min(self._c) if self._c else -1

    def at_one(self) -> int:
        return sum(self._c.values())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def __repr__(self) -> str:
        return f"QPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, v in self.items():
            if e == 0:
                body = str(v)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if v == 1 else ("-" + mono if v == -1 else f"{v}*{mono}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list:
        return [[e, str(v)] for e, v in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "QPoly":
        return cls({int(e): int(v) for e, v in data})


ZERO = QPoly()
ONE = QPoly.constant(1)


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


@dataclass(frozen=True)
class TSeries:
    """Power series in ``t`` known modulo ``t**(order+1)``."""

    order: int
    coeffs: tuple[QPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls(order, (ZERO,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls.monomial(order, 0)

    @classmethod
    def monomial(cls, order: int, t_exp: int, coeff: QPoly = ONE) -> "TSeries":
        c = [ZERO] * (order + 1)
        if t_exp <= order:
            c[t_exp] = coeff
        return cls(order, tuple(c))

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int | None = None) -> "TSeries":
        """Build from a list of QPoly or ints; pads with zeros up to ``order``."""
        if order is None:
            order = len(coeffs) - 1
        c = [x if isinstance(x, QPoly) else QPoly.constant(x) for x in coeffs[: order + 1]]
        c.extend([ZERO] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    def __getitem__(self, k: int) -> QPoly:
        return self.coeffs[k]

    def _check(self, other: "TSeries"):
        if not isinstance(other, TSeries):
            raise TypeError(f"expected TSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TSeries") -> "TSeries":
        return series_mul(self, other)

    def shift_t(self, k: int) -> "TSeries":
        """Multiply by ``t**k`` (k >= 0), dropping terms past the order."""
        if k < 0:
            raise ValueError("negative t-shift")
        c = [ZERO] * min(k, self.order + 1) + list(self.coeffs[: max(self.order + 1 - k, 0)])
        return TSeries(self.order, tuple(c))

    def scale_q(self, k: int) -> "TSeries":
        return TSeries(self.order, tuple(c.shift(k) for c in self.coeffs))

    def at_q_zero(self) -> list[int]:
        return [c[0] for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if k == 0:
                terms.append(cs)
            else:
                tk = "t" if k == 1 else f"t^{k}"
                terms.append(tk if c == ONE else f"({cs})*{tk}")
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "TSeries":
        return cls(int(data["order"]), tuple(QPoly.from_json(c) for c in data["coeffs"]))


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    a._check(b)
    n = a.order
    out = [ZERO] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return TSeries(n, tuple(out))


def _mul_binomial(c: list[QPoly], q_exp: int, t_exp: int) -> None:
    # in place: c *= (1 - q^a t^b)
    for k in range(len(c) - 1, t_exp - 1, -1):
        prev = c[k - t_exp]
        if prev:
            c[k] = c[k] - prev.shift(q_exp)


def _div_binomial(c: list[QPoly], q_exp: int, t_exp: int) -> None:
    # in place: c /= (1 - q^a t^b), i.e. c[k] += q^a c[k-b] in increasing k
    for k in range(t_exp, len(c)):
        prev = c[k - t_exp]
        if prev:
            c[k] = c[k] + prev.shift(q_exp)


def expand_product(factors: Iterable[tuple[int, int, int]], order: int,
                   start: TSeries | None = None) -> TSeries:
    """Expand ``prod (1 - q**a * t**b) ** e`` to the given order.

    ``factors`` holds ``(a, b, e)`` triples with ``b >= 1`` and ``e`` in
    ``{+1, -1}``; repeat a triple to raise the multiplicity. Factors with
    ``b > order`` are ignored since they are 1 modulo the truncation.
    """
    if start is None:
        c = [ONE] + [ZERO] * order
    else:
        if start.order != order:
            raise OrderMismatch(f"orders differ: {start.order} vs {order}")
        c = list(start.coeffs)
    for q_exp, t_exp, e in factors:
        if t_exp < 1:
            raise ValueError(f"factor with t-exponent {t_exp} is not a unit")
        if q_exp < 0:
            raise ValueError(f"negative q-exponent {q_exp}")
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        if t_exp > order:
            continue
        if e == 1:
            _mul_binomial(c, q_exp, t_exp)
        else:
            _div_binomial(c, q_exp, t_exp)
    return TSeries(order, tuple(c))


@dataclass(frozen=True)
class Mismatch:
    t_exp: int
    lhs: QPoly
    rhs: QPoly

    def to_json(self) -> dict:
        return {"tExp": self.t_exp, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


def series_eq(a: TSeries, b: TSeries) -> tuple[bool, Mismatch | None]:
    """Compare two series; on failure report the smallest differing t-exponent."""
    a._check(b)
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return False, Mismatch(k, x, y)
    return True, None
