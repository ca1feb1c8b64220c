"""Ribbon numbers: descent-class sizes in types A, B, D.

Three independent routes are provided and cross-checked by the test suite:

  * exact alternating sums of (weighted) multinomial coefficients over the
    coarsenings of the index (``ribbon_a`` / ``ribbon_b`` / ``ribbon_d``);
  * for type A only, an equivalent determinant evaluated exactly over the
    integers (``ribbon_a_det``);
  * brute-force enumeration of the group itself, tallying descent sets
    (``oracle_descent_class_sizes``).

``ribbon_mod_p`` evaluates a single ribbon number modulo a prime using the
base-p digit factorization of each term, skipping the terms that provably
vanish before summing.
"""

from __future__ import annotations

import os
from itertools import permutations
from math import factorial

from .arith import base_p_digits, check_prime, multinomial_exact
from .compositions import (
    CapacityError,
    Composition,
    DescentSet,
    PseudoComposition,
)

# Descent-class sizes are plain arbitrary-precision ints.
RibbonValue = int

FAMILIES = ("A", "B", "D")

# Group-enumeration budgets for the oracle: #elements stays below ~10^6.
ORACLE_MAX_N = {"A": 9, "B": 7, "D": 7}

# Below rank 4 the even-signed-permutation group is not a type-D Coxeter
# group; the formulas still apply and are flagged degenerate by callers.
D_MIN_COXETER_RANK = 4


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    return family


def _check_index(family: str, alpha):
    if family == "A":
        if not isinstance(alpha, Composition):
            raise TypeError("family A is indexed by Composition")
    elif not isinstance(alpha, PseudoComposition):
        raise TypeError("families B and D are indexed by PseudoComposition")
    return alpha


# ---------------------------------------------------------------------------
# exact values


def ribbon_a(alpha: Composition) -> int:
    """Type-A ribbon number by inclusion-exclusion over coarsenings."""
    n = alpha.n
    ell = len(alpha)
    total = 0
    for beta in alpha.coarsenings():
        term = multinomial_exact(n, beta.parts)
        total += term if (ell - len(beta)) % 2 == 0 else -term
    return total


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    size = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def ribbon_a_det(alpha: Composition) -> int:
    """Type-A ribbon number via the determinant of reciprocal factorials.

    The determinant of the matrix with entries 1/(s_j - s_{i-1})!, where the
    s_i are the prefix sums of alpha and 1/k! is 0 for k < 0, is scaled by
    n!.  Row i is cleared to integers by (n - s_{i-1})!, so the whole
    computation stays in exact integer arithmetic.  This exists purely as an
    independent cross-check of ribbon_a.
    """
    sigma = alpha.prefix_sums()
    n = alpha.n
    ell = len(alpha)
    rows = []
    for i in range(1, ell + 1):
        base = sigma[i - 1]
        row = []
        for j in range(1, ell + 1):
            k = sigma[j] - base
            if k < 0:
                row.append(0)
            else:
                # (n - base)! / k!  as a falling-factorial product
                val = 1
                for t in range(k + 1, n - base + 1):
                    val *= t
                row.append(val)
        rows.append(row)
    det = _bareiss_det(rows)
    denom = 1
    for i in range(1, ell + 1):
        denom *= factorial(n - sigma[i - 1])
    num = factorial(n) * det
    if num % denom:
        raise ArithmeticError("determinant route produced a non-integer")
    return num // denom


def ribbon_b(alpha: PseudoComposition) -> int:
    """Type-B ribbon number: signed sum of 2^(n-b_1) C(n; b) over b <= alpha."""
    n = alpha.n
    ell = len(alpha)
    total = 0
    for beta in alpha.coarsenings():
        parts = beta.parts
        term = (1 << (n - parts[0])) * multinomial_exact(n, parts)
        total += term if (ell - len(beta)) % 2 == 0 else -term
    return total


def _covering_count_d(n: int, parts: tuple[int, ...]) -> int:
    """Elements of the even-signed-permutation group with descents inside D(beta)."""
    first = parts[0]
    if first == 0:
        return (1 << (n - 1)) * multinomial_exact(n, parts)
    if first == 1:
        merged = (1 + parts[1],) + parts[2:]
        return (1 << (n - 1)) * multinomial_exact(n, merged)
    return (1 << (n - first)) * multinomial_exact(n, parts)


def ribbon_d(alpha: PseudoComposition) -> int:
    """Type-D ribbon number.

    Valid for n >= 2; for n < 4 the value still counts descent classes of
    the even-signed-permutation group even though that group is not an
    irreducible type-D Coxeter group.
    """
    n = alpha.n
    if n < 2:
        raise ValueError("type D needs n >= 2")
    ell = len(alpha)
    total = 0
    for beta in alpha.coarsenings():
        term = _covering_count_d(n, beta.parts)
        total += term if (ell - len(beta)) % 2 == 0 else -term
    return total


def ribbon_exact(family: str, alpha) -> int:
    """Dispatch to the family's exact ribbon number."""
    _check_family(family)
    _check_index(family, alpha)
    if family == "A":
        return ribbon_a(alpha)
    if family == "B":
        return ribbon_b(alpha)
    return ribbon_d(alpha)


# ---------------------------------------------------------------------------
# modular values


def _digit_cache(n: int, p: int, width: int):
    cache: dict[int, tuple[int, ...]] = {}

    def padded(m: int) -> tuple[int, ...]:
        row = cache.get(m)
        if row is None:
            row = base_p_digits(m, p).padded(width)
            cache[m] = row
        return row

    return padded


def term_mod_p(family: str, parts: tuple[int, ...], nd: tuple[int, ...],
               p: int, digit_row, inv2: int) -> int:
    """One refinement term of a ribbon number, reduced mod p digitwise.

    ``nd`` holds the digits of n, ``digit_row(m)`` the padded digits of m,
    and ``inv2`` the inverse of 2 mod p (unused for family A).  Returns 0
    exactly when the digit rows of the (adjusted) parts fail to form a
    vector composition of the digits of n.
    """
    halve = False
    if family == "D":
        first = parts[0]
        if first == 1:
            parts = (0, 1 + parts[1]) + parts[2:]
        halve = first <= 1
    rows = [digit_row(m) for m in parts]
    w = 1
    for j, nj in enumerate(nd):
        w = w * multinomial_exact(nj, (row[j] for row in rows)) % p
        if w == 0:
            return 0
    if family == "A":
        return w
    exponent = sum(nd) - sum(rows[0])
    w = w * pow(2, exponent, p) % p
    if halve:
        w = w * inv2 % p
    return w


def useful_descent_mask(family: str, alpha, p: int) -> int:
    """Mask of descent positions of alpha that can carry mod-p survivors.

    A refinement term survives the digit test only if all its descents are
    digit-bounded sums of powers of p (position 1 is also allowed in type D).
    """
    nd = base_p_digits(alpha.n, p)
    width = len(nd)
    lo = 1 if family == "A" else 0
    mask = 0
    for d in alpha.descents():
        if family == "D" and d == 1:
            mask |= 1 << (d - lo)
            continue
        row = base_p_digits(d, p).padded(width)
        if all(row[j] <= nd[j] for j in range(width)):
            mask |= 1 << (d - lo)
    return mask


def ribbon_mod_p(family: str, alpha, p: int) -> int:
    """Ribbon number of alpha modulo p, term by term with the vanishing filter.

    For families B and D with p = 2 the answer is 1 outright, since every
    ribbon number there is odd.
    """
    _check_family(family)
    _check_index(family, alpha)
    check_prime(p)
    n = alpha.n
    if family in ("B", "D") and p == 2:
        return 1
    if family == "D" and n < D_MIN_COXETER_RANK:
        return ribbon_d(alpha) % p
    nd = base_p_digits(n, p).digits
    digit_row = _digit_cache(n, p, len(nd))
    inv2 = pow(2, p - 2, p) if p > 2 else 1
    ell = len(alpha)
    cls = type(alpha)
    live = useful_descent_mask(family, alpha, p)
    total = 0
    sub = 0
    while True:
        beta = cls.from_mask(n, sub)
        w = term_mod_p(family, beta.parts, nd, p, digit_row, inv2)
        if w:
            total += w if (ell - len(beta)) % 2 == 0 else -w
        if sub == live:
            break
        sub = (sub - live) & live
    return total % p


# ---------------------------------------------------------------------------
# brute-force group oracles


class SignedPermutation:
    """A signed permutation of [n], stored by its window w(1), ..., w(n)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(abs(v) for v in images) != list(range(1, n + 1)) or 0 in images:
            raise ValueError(f"not a signed permutation window: {images}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def negatives(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def is_even(self) -> bool:
        """Whether this element lies in the type-D subgroup."""
        return self.negatives() % 2 == 0

    def descent_set(self, family: str) -> DescentSet:
        if family not in ("B", "D"):
            raise ValueError("signed-permutation descents are defined for families B and D")
        return DescentSet(self.n, _signed_descent_mask(self.images, family), "BD")

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"SignedPermutation({self.images})"


def _signed_descent_mask(w: tuple[int, ...], family: str) -> int:
    # Position 0 compares against w(0) := 0 in type B and w(0) := -w(2) in type D.
    if family == "B":
        mask = 1 if w[0] < 0 else 0
    else:
        mask = 1 if -w[1] > w[0] else 0
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            mask |= 1 << i
    return mask


def worker_limit() -> int:
    """Upper bound on worker parallelism, from RIBBONMOD_THREADS (default 1)."""
    raw = os.environ.get("RIBBONMOD_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _oracle_chunk(family: str, n: int, first: int) -> dict[int, int]:
    """Tally descent masks over all group elements whose window starts with
    the letter ``first`` (up to sign for families B and D)."""
    counts: dict[int, int] = {}
    rest = [v for v in range(1, n + 1) if v != first]
    if family == "A":
        for tail in permutations(rest):
            w = (first,) + tail
            mask = 0
            for i in range(1, n):
                if w[i - 1] > w[i]:
                    mask |= 1 << (i - 1)
            counts[mask] = counts.get(mask, 0) + 1
        return counts
    even_only = family == "D"
    for tail in permutations(rest):
        base = (first,) + tail
        for signs in range(1 << n):
            if even_only and signs.bit_count() % 2:
                continue
            w = tuple(-v if signs >> i & 1 else v for i, v in enumerate(base))
            mask = _signed_descent_mask(w, family)
            counts[mask] = counts.get(mask, 0) + 1
    return counts


def oracle_descent_class_sizes(family: str, n: int) -> dict[DescentSet, int]:
    """Descent-class sizes by enumerating the whole group.

    Family A sweeps permutations of [n]; B sweeps signed permutations; D
    keeps the even ones.  The sweep may be partitioned over processes, up
    to the RIBBONMOD_THREADS bound; tallies merge by addition, so the
    result does not depend on the schedule.
    """
    _check_family(family)
    lo = 2 if family == "D" else 1
    if not lo <= n <= ORACLE_MAX_N[family]:
        raise CapacityError(
            f"oracle budget for family {family} is {lo} <= n <= {ORACLE_MAX_N[family]}"
        )
    jobs = [(family, n, first) for first in range(1, n + 1)]
    workers = min(worker_limit(), len(jobs))
    if workers > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(workers) as pool:
            chunks = pool.starmap(_oracle_chunk, jobs)
    else:
        chunks = [_oracle_chunk(*job) for job in jobs]
    merged: dict[int, int] = {}
    for chunk in chunks:
        for mask, c in chunk.items():
            merged[mask] = merged.get(mask, 0) + c
    dfam = "A" if family == "A" else "BD"
    return {DescentSet(n, mask, dfam): c for mask, c in merged.items()}
