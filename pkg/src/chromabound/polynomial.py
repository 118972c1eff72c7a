"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial sum(coeffs[k] * t**k) with Python ints.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, t: Any) -> Any:
        """Horner evaluation; works for ints, Fractions, floats and complex."""
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def shift_up(self, k: int) -> IntPolynomial:
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divide_linear(self, r: int) -> tuple[IntPolynomial, int]:
        """Synthetic division by (t - r): returns (quotient, remainder)."""
        if self.is_zero():
            return IntPolynomial(), 0
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return IntPolynomial(tuple(reversed(out))), rem

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("q" if k == 1 else f"q^{k}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(v: IntPolynomial | int) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    return IntPolynomial((int(v),))


Q = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))
