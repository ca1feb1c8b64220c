"""Dimension p-vectors: how many ribbon numbers fall in each class mod p.

For a family F in {A, B, D}, the vector counts the indices alpha (of the
2^(n-1) compositions in type A, the 2^n pseudo-compositions otherwise)
whose ribbon number is congruent to each residue mod p.  Three methods:

  * ``cvec_naive``    -- reduce every ribbon number mod p and tally.  The
    whole index lattice is processed at once with an inclusion-exclusion
    butterfly over exact multinomial weights, so nothing here touches the
    digit machinery used by the other two methods.
  * ``cvec_theorem``  -- the digit method.  Only descent positions whose
    base-p digits are bounded by the digits of n can carry surviving
    refinement terms; sweeping the subsets T of that support set and
    weighting the residue tally by powers of two gives the vector without
    ever enumerating the index lattice, so n may be astronomically large
    as long as the support stays small.
  * ``cvec_closed_form`` -- closed forms for special digit patterns of n
    (single nonzero digit, digits all 0/1, and a handful of type-D shapes),
    evaluated through chain statistics or tiny frozen residue tallies.

``cvec`` dispatches: closed form if one applies, else theorem, else naive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .arith import base_p_digits, check_odd_prime, check_prime
from .compositions import CapacityError
from .ribbon import term_mod_p, _check_family, _digit_cache

# Full index-lattice sweeps (naive method) and support-subset sweeps
# (theorem method) are capped to keep memory and time sane.
NAIVE_MAX_BITS = 26
SUPPORT_MAX = 22


@dataclass(frozen=True)
class DimensionPVector:
    """Length-p vector of exact counts, one per residue class, with provenance."""

    family: str
    n: int
    p: int
    counts: tuple[int, ...]
    method: str = field(compare=False, default="naive")

    def __post_init__(self):
        if len(self.counts) != self.p:
            raise ValueError("counts must have one entry per residue class")

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class SupportSet:
    """Descent positions that can carry mod-p survivors, for one (family, n, p)."""

    family: str
    n: int
    p: int
    elements: tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def support_set(family: str, n: int, p: int) -> SupportSet:
    """The family-adjusted set of digit-bounded sums of powers of p.

    Starting from all sums b_0 + b_1 p + ... with 0 <= b_j <= (j-th digit
    of n): family A drops {0, n}, family B drops {n}, family D adjoins {1}
    and drops {n}.
    """
    _check_family(family)
    check_prime(p)
    if family == "D":
        if n < 4:
            raise ValueError("the type-D support set needs n >= 4")
        check_odd_prime(p)
    else:
        if n < 2:
            raise ValueError("the support set needs n >= 2")
        if family == "B":
            check_odd_prime(p)
    digits = base_p_digits(n, p).digits
    vals = [0]
    for j, dj in enumerate(digits):
        if dj == 0:
            continue
        if len(vals) * (dj + 1) > 1 << SUPPORT_MAX:
            raise CapacityError("support set too large to materialize")
        step = p**j
        vals = [v + b * step for v in vals for b in range(dj + 1)]
    base = set(vals)
    if family == "A":
        base -= {0, n}
    elif family == "B":
        base -= {n}
    else:
        base.add(1)
        base -= {n}
    return SupportSet(family, n, p, tuple(sorted(base)))


def _parts_from_selected(n: int, positions, mask: int) -> tuple[int, ...]:
    # positions is sorted ascending; selected ones become the descent set.
    parts = []
    prev = 0
    m = mask
    while m:
        b = (m & -m).bit_length() - 1
        d = positions[b]
        parts.append(d - prev)
        prev = d
        m &= m - 1
    parts.append(n - prev)
    return tuple(parts)


def support_residue(family: str, subset, n: int, p: int) -> int:
    """Residue contributed by one support subset T.

    The alternating sum, over (pseudo-)compositions beta with descents
    inside T whose digit rows survive the vanishing test, of the Dickson
    digit product (with the family's power-of-two weights, and the type-D
    first-part adjustment).  Every index whose descent pattern restricted
    to the support equals T has ribbon number congruent to +/- this value.
    """
    sup = support_set(family, n, p)
    T = tuple(sorted(set(subset)))
    if not set(T) <= set(sup.elements):
        raise ValueError("subset must lie inside the support set")
    nd = base_p_digits(n, p).digits
    digit_row = _digit_cache(n, p, len(nd))
    inv2 = pow(2, p - 2, p) if p > 2 else 1
    size = len(T)
    total = 0
    for sel in range(1 << size):
        parts = _parts_from_selected(n, T, sel)
        w = term_mod_p(family, parts, nd, p, digit_row, inv2)
        if w:
            total += w if (size - sel.bit_count()) % 2 == 0 else -w
    return total % p


# ---------------------------------------------------------------------------
# naive method: butterfly over the full index lattice


def _inverse_zeta_mod(vals: list[int], p: int) -> None:
    """In place: vals[T] <- sum over S subset T of (-1)^|T\\S| vals[S], mod p."""
    size = len(vals)
    step = 1
    while step < size:
        double = step * 2
        for base in range(0, size, double):
            lo = base + step
            hi = base + double
            ref = vals[base:lo]
            vals[lo:hi] = [(x - y) % p for x, y in zip(vals[lo:hi], ref)]
        step = double
    return None


def _multinomial_table(n: int, lo: int) -> list[int]:
    # out[mask] = multinomial of the composition whose descent set is mask,
    # where bit b encodes descent position b + lo.
    bits = n - 1 if lo else n
    size = 1 << bits
    g = [1] * size
    top = [0] * size
    out = [1] * size
    for mask in range(1, size):
        h = mask.bit_length() - 1
        d = h + lo
        rest = mask ^ (1 << h)
        g[mask] = g[rest] * comb(d, d - top[rest])
        top[mask] = d
        out[mask] = g[mask] * comb(n, n - d)
    return out


@lru_cache(maxsize=4)
def _exact_weight_table(family: str, n: int) -> tuple[int, ...]:
    """Covering counts indexed by descent mask: the number of group elements
    whose descent set is contained in the mask's descent set."""
    if family == "A":
        return tuple(_multinomial_table(n, 1))
    mult = _multinomial_table(n, 0)
    size = len(mult)
    out = [0] * size
    out[0] = 1
    if family == "B":
        for mask in range(1, size):
            first = (mask & -mask).bit_length() - 1
            out[mask] = mult[mask] << (n - first)
        return tuple(out)
    # family D: the covering count depends on the first part of the index
    for mask in range(1, size):
        first = (mask & -mask).bit_length() - 1
        if first == 0:
            out[mask] = mult[mask] << (n - 1)
        elif first == 1:
            out[mask] = mult[(mask & ~2) | 1] << (n - 1)
        else:
            out[mask] = mult[mask] << (n - first)
    return tuple(out)


def _naive_tally(family: str, n: int, p: int) -> list[int]:
    bits = n - 1 if family == "A" else n
    if bits > NAIVE_MAX_BITS:
        raise CapacityError(
            f"naive sweep needs 2^{bits} indices; the budget is 2^{NAIVE_MAX_BITS}"
        )
    weights = _exact_weight_table(family, n)
    vals = [w % p for w in weights]
    _inverse_zeta_mod(vals, p)
    # vals[mask] is now the ribbon number of the index with that descent mask
    tally = [0] * p
    for r in vals:
        tally[r] += 1
    return tally


def cvec_naive(family: str, n: int, p: int) -> DimensionPVector:
    """Histogram of all ribbon numbers mod p, by sweeping the index lattice."""
    _check_family(family)
    check_prime(p)
    if n < 1 or (family == "D" and n < 2):
        raise ValueError(f"n={n} out of range for family {family}")
    return DimensionPVector(family, n, p, tuple(_naive_tally(family, n, p)), "naive")


# ---------------------------------------------------------------------------
# theorem method: support-subset sweep


def _assemble(p: int, tally: list[int], free: int) -> tuple[int, ...]:
    # free = number of descent positions outside the support; each support
    # pattern is shared by 2^free indices.  When p is odd and some free
    # position exists, half of those indices flip the sign of the residue,
    # pairing i with p - i.
    if p == 2 or free == 0:
        return tuple(t << free for t in tally)
    counts = [tally[0] << free]
    shift = free - 1
    counts.extend((tally[i] + tally[p - i]) << shift for i in range(1, p))
    return tuple(counts)


def _theorem_tally(family: str, n: int, p: int) -> tuple[list[int], int]:
    sup = support_set(family, n, p)
    pos = sup.elements
    m = len(pos)
    if m > SUPPORT_MAX:
        raise CapacityError(
            f"support sweep needs 2^{m} subsets; the budget is 2^{SUPPORT_MAX}"
        )
    nd = base_p_digits(n, p).digits
    digit_row = _digit_cache(n, p, len(nd))
    inv2 = pow(2, p - 2, p) if p > 2 else 1
    vals = [0] * (1 << m)
    for mask in range(1 << m):
        parts = _parts_from_selected(n, pos, mask)
        vals[mask] = term_mod_p(family, parts, nd, p, digit_row, inv2)
    _inverse_zeta_mod(vals, p)
    tally = [0] * p
    for r in vals:
        tally[r] += 1
    free = (n - 1 - m) if family == "A" else (n - m)
    return tally, free


def cvec_theorem(family: str, n: int, p: int) -> DimensionPVector:
    """Dimension p-vector by the digit method; never enumerates the lattice."""
    _check_family(family)
    check_prime(p)
    if family == "D":
        if n < 4:
            raise ValueError("the theorem method needs n >= 4 in type D")
    elif n < 2:
        raise ValueError("the theorem method needs n >= 2")
    if p == 2 and family in ("B", "D"):
        # every type-B/D ribbon number is odd
        counts = (0, 1 << n)
        return DimensionPVector(family, n, p, counts, "theorem")
    tally, free = _theorem_tally(family, n, p)
    return DimensionPVector(family, n, p, _assemble(p, tally, free), "theorem")


# ---------------------------------------------------------------------------
# chain statistics on sub-sum posets


def signed_chain_count(elements) -> int:
    """Even-size chains minus odd-size chains in a poset of sets.

    ``elements`` is a collection of sets ordered by inclusion; the empty
    chain counts as even, so the empty poset gives 1.
    """
    elems = [frozenset(x) for x in elements]
    if len(set(elems)) != len(elems):
        raise ValueError("poset elements must be distinct")
    elems.sort(key=len)
    ending: list[int] = []
    for i, x in enumerate(elems):
        below = sum(ending[j] for j in range(i) if elems[j] < x)
        ending.append(-(1 + below))
    return 1 + sum(ending)


def weighted_chain_count(elements, k: int) -> int:
    """Type-B chain statistic over a poset of proper subsets of k powers.

    Sums (-1)^h * 2^(k - |U_1|) over the chains U_1 < ... < U_h drawn from
    ``elements`` (again sets ordered by inclusion); the empty chain
    contributes 1.
    """
    elems = [frozenset(x) for x in elements]
    if len(set(elems)) != len(elems):
        raise ValueError("poset elements must be distinct")
    if any(len(x) >= k for x in elems):
        raise ValueError("elements must be proper subsets of the k powers")
    elems.sort(key=len, reverse=True)
    starting: list[int] = []
    for i, x in enumerate(elems):
        above = sum(starting[j] for j in range(i) if elems[j] > x)
        starting.append(-(1 + above))
    return 1 + sum(t << (k - len(x)) for t, x in zip(starting, elems))


def _chi_tally(k: int, p: int) -> list[int]:
    # chain statistic chi over all subsets T of the 2^k - 2 nonempty proper
    # sums; a subset relation among sums is a submask relation among members
    members = list(range(1, (1 << k) - 1))  # ascending: subsets come first
    m = len(members)
    below = [0] * m
    for i, a in enumerate(members):
        for j in range(i):
            if members[j] & a == members[j]:
                below[i] |= 1 << j
    tally = [0] * p
    for tmask in range(1 << m):
        ending = [0] * m
        total = 1
        rem = tmask
        while rem:
            i = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            acc = 1
            sub = below[i] & tmask
            while sub:
                j = (sub & -sub).bit_length() - 1
                sub &= sub - 1
                acc += ending[j]
            ending[i] = -acc
            total -= acc
        tally[total % p] += 1
    return tally


def _chi_b_tally(k: int, p: int) -> list[int]:
    # weighted chain statistic over all subsets T of the 2^k - 1 proper sums
    # (the empty sum included); chains extend upward, so supersets come first
    members = list(range((1 << k) - 2, -1, -1))  # descending mask order
    m = len(members)
    above = [0] * m
    for i, a in enumerate(members):
        for j in range(i):
            if members[j] & a == a and members[j] != a:
                above[i] |= 1 << j
    shifts = [k - x.bit_count() for x in members]
    tally = [0] * p
    for tmask in range(1 << m):
        starting = [0] * m
        total = 1
        rem = tmask
        while rem:
            i = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            acc = 1
            sub = above[i] & tmask
            while sub:
                j = (sub & -sub).bit_length() - 1
                sub &= sub - 1
                acc += starting[j]
            starting[i] = -acc
            total -= acc << shifts[i]
        tally[total % p] += 1
    return tally


# ---------------------------------------------------------------------------
# closed forms


class NoClosedFormError(LookupError):
    """No closed form applies to the requested (family, n, p)."""


# Frozen residue tallies for the type-D digit shapes, straight from the
# support-subset analysis; keys are exact integers, reduced mod p on use.
_D_RULES = {
    "p^d": ({1: 1, 0: 2, -1: 1}, 2),
    "2p^d": ({1: 3, -1: 3, 3: 1, -3: 1}, 3),
    "3p^d": ({1: 1, -1: 1, 3: 4, -3: 4, 5: 1, -5: 1, 7: 1, -7: 1, 11: 1, -11: 1}, 4),
    "1+p^d": ({1: 4, -1: 4}, 3),
    "p^a+p^b": ({1: 10, -1: 4, -3: 2}, 4),
}

_A_TWO_PLUS_ONE = ({0: 6, 1: 6, -1: 2, -2: 2}, 4)


def _reduce_tally(raw: dict[int, int], p: int) -> list[int]:
    tally = [0] * p
    for v, c in raw.items():
        tally[v % p] += c
    return tally


def _vector(family, n, p, tally, free, rule) -> DimensionPVector:
    counts = _assemble(p, tally, free)
    return DimensionPVector(family, n, p, counts, f"closed-form:{rule}")


def cvec_closed_form(family: str, n: int, p: int):
    """The dimension p-vector when n matches a pattern with a closed form.

    Returns None when no pattern applies.  The provenance tag records the
    pattern, e.g. ``closed-form:p^a+p^b``.
    """
    _check_family(family)
    check_prime(p)
    if n < 1 or (family == "D" and n < 2):
        raise ValueError(f"n={n} out of range for family {family}")
    if p == 2 and family == "B":
        return DimensionPVector(family, n, p, (0, 1 << n), "closed-form:parity")
    if p == 2 and family == "D":
        if n < 4:
            return None
        return DimensionPVector(family, n, p, (0, 1 << n), "closed-form:parity")
    nonzero = [(j, d) for j, d in enumerate(base_p_digits(n, p).digits) if d]
    if family == "A":
        return _closed_a(n, p, nonzero)
    if family == "B":
        return _closed_b(n, p, nonzero)
    return _closed_d(n, p, nonzero)


def _closed_a(n, p, nonzero):
    if len(nonzero) == 1 and nonzero[0][0] >= 1:
        m = nonzero[0][1]
        tally = _naive_tally("A", m, p)
        return _vector("A", n, p, tally, n - m, "m*p^d")
    if all(d == 1 for _, d in nonzero) and 2 <= len(nonzero) <= 4:
        k = len(nonzero)
        tally = _chi_tally(k, p)
        return _vector("A", n, p, tally, n - (1 << k) + 1, "p-powers")
    if p > 2 and sorted(d for _, d in nonzero) == [1, 2]:
        raw, support = _A_TWO_PLUS_ONE
        return _vector("A", n, p, _reduce_tally(raw, p), n - 1 - support, "2p^d+p^e")
    return None


def _closed_b(n, p, nonzero):
    if len(nonzero) == 1 and nonzero[0][0] >= 1:
        m = nonzero[0][1]
        tally = _naive_tally("B", m, p)
        return _vector("B", n, p, tally, n - m, "m*p^d")
    if len(nonzero) == 2 and all(d == 1 for _, d in nonzero):
        tally = _chi_b_tally(2, p)
        return _vector("B", n, p, tally, n - 3, "p-powers")
    return None


def _closed_d(n, p, nonzero):
    if n < 4:
        return None
    rule = None
    if len(nonzero) == 1 and nonzero[0][0] >= 1:
        rule = {1: "p^d", 2: "2p^d", 3: "3p^d"}.get(nonzero[0][1])
    elif len(nonzero) == 2 and all(d == 1 for _, d in nonzero):
        rule = "1+p^d" if nonzero[0][0] == 0 else "p^a+p^b"
    if rule is None:
        return None
    raw, support = _D_RULES[rule]
    return _vector("D", n, p, _reduce_tally(raw, p), n - support, rule)


# ---------------------------------------------------------------------------
# dispatch


def cvec(family: str, n: int, p: int, method: str = "auto") -> DimensionPVector:
    """Compute the dimension p-vector by the requested method.

    ``auto`` prefers a closed form, then the theorem method, then the
    naive sweep.
    """
    _check_family(family)
    check_prime(p)
    if n < 1 or (family == "D" and n < 2):
        raise ValueError(f"n={n} out of range for family {family}")
    if method == "naive":
        return cvec_naive(family, n, p)
    if method == "theorem":
        return cvec_theorem(family, n, p)
    if method == "closed":
        vec = cvec_closed_form(family, n, p)
        if vec is None:
            raise NoClosedFormError(f"no closed form applies to ({family}, n={n}, p={p})")
        return vec
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    vec = cvec_closed_form(family, n, p)
    if vec is not None:
        return vec
    if n >= (4 if family == "D" else 2):
        try:
            return cvec_theorem(family, n, p)
        except CapacityError:
            pass
    return cvec_naive(family, n, p)


# ---------------------------------------------------------------------------
# symmetric-group side counts


def partitions(n: int, _max: int | None = None):
    """Weakly decreasing positive tuples summing to n, largest part first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    top = n if _max is None or _max > n else _max
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def standard_tableau_count(shape) -> int:
    """Number of standard fillings of a partition shape (hook products)."""
    shape = tuple(shape)
    if not shape or any(a < 1 for a in shape):
        raise ValueError("shape parts must be positive")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError("shape must be weakly decreasing")
    n = sum(shape)
    cols = [sum(1 for row in shape if row > j) for j in range(shape[0])]
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return factorial(n) // hooks


def _colored_partition_count(m: int, colors: int) -> int:
    # coefficient of x^m in prod_{i >= 1} (1 - x^i)^(-colors)
    coeffs = [1] + [0] * m
    for i in range(1, m + 1):
        new = coeffs[:]
        t = 1
        while i * t <= m:
            c = comb(colors + t - 1, t)
            for idx in range(i * t, m + 1):
                new[idx] += c * coeffs[idx - i * t]
            t += 1
        coeffs = new
    return coeffs[m]


def macdonald_mp(n: int, p: int) -> int:
    """How many irreducible symmetric-group representations of S_n have
    dimension coprime to p: the product over base-p digits n_j of the
    coefficient of x^(n_j) in prod_i (1 - x^i)^(-p^j)."""
    check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    for j, nj in enumerate(base_p_digits(n, p)):
        if nj:
            result *= _colored_partition_count(nj, p**j)
    return result
