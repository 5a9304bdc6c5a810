"""Univariate polynomials with exact integer coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Poly:
    """Dense univariate polynomial in ``z``; ``coeffs[k]`` multiplies ``z**k``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Index of the first nonzero coefficient; -1 for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Poly(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def padded(self, length: int) -> list[int]:
        """Coefficient list zero-padded (never truncated) to ``length``."""
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def reversed_in(self, frame: int) -> Poly:
        """``z**frame * p(1/z)``; requires ``degree <= frame``."""
        if self.degree > frame:
            raise ValueError(f"degree {self.degree} exceeds frame {frame}")
        return Poly(reversed(self.padded(frame + 1)))

    def mean_exponent(self) -> Fraction:
        """``p'(1) / p(1)`` as an exact rational."""
        total = self(1)
        if total == 0:
            raise ZeroDivisionError("p(1) == 0")
        return Fraction(self.derivative()(1), total)

    def to_str(self, var: str = "z") -> str:
        """Lowest degree first, e.g. ``1 + 6z + 8z^2``."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = str(c)
            else:
                power = var if k == 1 else f"{var}^{k}"
                mono = {1: power, -1: "-" + power}.get(c, f"{c}{power}")
            parts.append(mono)
        if not parts:
            return "0"
        s = parts[0]
        for p in parts[1:]:
            s += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"
