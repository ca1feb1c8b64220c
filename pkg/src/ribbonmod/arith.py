"""Base-p digit vectors and exact/modular multinomial arithmetic.

Everything here is pure integer arithmetic on Python ints, so results are
exact at any size.  Moduli are validated as primes by trial division the
first time they are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (fine for word-sized p)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    limit = isqrt(p)
    while d <= limit:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Return p, raising ValueError if it is not a prime."""
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"modulus must be a prime, got {p!r}")
    return p


def check_odd_prime(p: int) -> int:
    check_prime(p)
    if p == 2:
        raise ValueError("modulus must be an odd prime")
    return p


@dataclass(frozen=True)
class BasePDigits:
    """Little-endian base-p digit vector of a nonnegative integer.

    ``digits[j]`` is the coefficient of p**j.  The top digit is nonzero
    except for the vector of 0, which is stored as ``(0,)``.
    """

    digits: tuple[int, ...]
    p: int

    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def padded(self, size: int) -> tuple[int, ...]:
        """Digits extended with high-order zeros to ``size`` entries."""
        if size < len(self.digits):
            raise ValueError("cannot pad below the digit count")
        return self.digits + (0,) * (size - len(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, j: int) -> int:
        return self.digits[j]

    def __iter__(self):
        return iter(self.digits)


def base_p_digits(n: int, p: int) -> BasePDigits:
    """Digits of n in base p, least significant first."""
    check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return BasePDigits((0,), p)
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return BasePDigits(tuple(digits), p)


def multinomial_exact(n: int, parts) -> int:
    """n! / (m_1! ... m_k!) when the parts sum to n, and 0 otherwise.

    The zero convention for mismatched sums means callers never need to
    pre-filter their part sequences.
    """
    parts = tuple(parts)
    if any(m < 0 for m in parts):
        raise ValueError("parts must be nonnegative")
    total = 0
    result = 1
    for m in parts:
        total += m
        if total > n:
            return 0
        result *= comb(total, m)
    return result if total == n else 0


def multinomial_mod_p(n: int, parts, p: int) -> int:
    """Multinomial coefficient modulo a prime via base-p digit columns.

    The value is the product over digit positions j of the multinomial of
    the j-th digits of the parts with top n_j; it vanishes exactly when the
    digit rows of the parts fail to reproduce the digits of n columnwise.
    Each per-digit multinomial has top < p, so it is computed exactly and
    then reduced.
    """
    check_prime(p)
    parts = tuple(parts)
    if any(m < 0 for m in parts):
        raise ValueError("parts must be nonnegative")
    if any(m > n for m in parts):
        return 0
    nd = base_p_digits(n, p)
    width = len(nd)
    rows = [base_p_digits(m, p).padded(width) for m in parts]
    result = 1
    for j, nj in enumerate(nd):
        result = result * multinomial_exact(nj, (row[j] for row in rows)) % p
        if result == 0:
            return 0
    return result


def pow2_mod_p(e: int, p: int) -> int:
    """2**e mod p for an odd prime p."""
    check_odd_prime(p)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(2, e, p)
