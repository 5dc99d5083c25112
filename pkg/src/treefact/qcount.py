"""Exact point counts: three independent polynomial counts that agree.

Three computations of the same point count are implemented:

* a sum over all distinguished subwords, weighted by skips and takes;
* a trace formula: a sum over Kostant partitions of one-variable brackets;
* a two-variable Hilbert series over the same Kostant partitions, which
  recovers the trace formula under ``t -> 1/q``.

All three equal ``(q - 1)^(2n-2) [n]_q^(n-2)``; extracting the coefficient of
``(q - 1)^(2n-2)`` at ``q = 1`` counts the labeled trees: ``n^(n-2)``.

All arithmetic is exact (integer Laurent polynomials; no floats).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .affine import DomainError, InvariantViolation, lambda_element
from .subwords import enumerate_distinguished

Scalar = Union[int, Fraction]


def _clean(coeffs: Mapping, zero=0) -> dict:
    return {k: v for k, v in coeffs.items() if v != zero}


@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial in ``q`` (exponent -> coefficient)."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for exp, c in self.coeffs.items():
            if not isinstance(exp, int) or not isinstance(c, int):
                raise DomainError(
                    f"exponents and coefficients must be integers: "
                    f"{exp!r}: {c!r}"
                )
            if c:
                clean[exp] = c
        object.__setattr__(self, "coeffs", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if self.is_zero():
            raise DomainError("the zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        if self.is_zero():
            raise DomainError("the zero polynomial has no valuation")
        return min(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({0: other})
        if isinstance(other, LaurentPoly):
            return other
        raise DomainError(f"cannot combine a Laurent polynomial with {other!r}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(_clean(out))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(_clean(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"exponent must be a nonnegative integer: {k!r}")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, delta: int) -> "LaurentPoly":
        """Multiply by ``q**delta``."""
        return LaurentPoly({e + delta: c for e, c in self.coeffs.items()})

    def __call__(self, q: Scalar) -> Scalar:
        total: Scalar = 0
        for exp, c in self.coeffs.items():
            total += c * (Fraction(q) ** exp if exp < 0 and not isinstance(
                q, Fraction) else q ** exp)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``DomainError`` on a nonzero remainder."""
        if divisor.is_zero():
            raise DomainError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # Shift both to ordinary polynomials, then long division.
        sv, dv = self.valuation(), divisor.valuation()
        num = {e - sv: Fraction(c) for e, c in self.coeffs.items()}
        den = {e - dv: Fraction(c) for e, c in divisor.coeffs.items()}
        dd = max(den)
        lead = den[dd]
        quo: dict[int, Fraction] = {}
        while num:
            nd = max(num)
            if nd < dd:
                raise DomainError(
                    f"{self} is not divisible by {divisor}"
                )
            factor = num[nd] / lead
            quo[nd - dd] = factor
            for e, c in den.items():
                key = e + nd - dd
                val = num.get(key, Fraction(0)) - factor * c
                if val:
                    num[key] = val
                else:
                    num.pop(key, None)
        out = {}
        for e, c in quo.items():
            if c.denominator != 1:
                raise DomainError(
                    f"quotient of {self} by {divisor} is not integral"
                )
            if c:
                out[e + sv - dv] = int(c)
        return LaurentPoly(out)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            if exp == 0:
                term = str(abs(c))
            else:
                mono = "q" if exp == 1 else f"q^{exp}"
                term = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def to_dict(self) -> dict:
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_dict(cls, data: Mapping) -> "LaurentPoly":
        try:
            return cls({int(e): int(c) for e, c in data.items()})
        except (TypeError, ValueError, AttributeError) as exc:
            raise DomainError(f"malformed polynomial record: {data!r}") from exc


Q = LaurentPoly({1: 1})


def qint(n: int) -> LaurentPoly:
    """The q-integer ``1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise DomainError(f"q-integer needs n >= 0, got {n}")
    return LaurentPoly({i: 1 for i in range(n)})


@dataclass(frozen=True)
class BiPoly:
    """An integer Laurent polynomial in ``q`` and ``t``
    (``(q-exponent, t-exponent) -> coefficient``)."""

    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for key, c in self.coeffs.items():
            eq, et = key
            if not (isinstance(eq, int) and isinstance(et, int)
                    and isinstance(c, int)):
                raise DomainError(
                    f"exponents and coefficients must be integers: "
                    f"{key!r}: {c!r}"
                )
            if c:
                clean[(eq, et)] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, eq: int, et: int, coeff: int = 1) -> "BiPoly":
        return cls({(eq, et): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        if isinstance(other, BiPoly):
            return other
        raise DomainError(f"cannot combine a two-variable polynomial "
                          f"with {other!r}")

    def __add__(self, other) -> "BiPoly":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(_clean(out))

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        other = self._coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(_clean(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"exponent must be a nonnegative integer: {k!r}")
        out = BiPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, q: Scalar, t: Scalar) -> Scalar:
        total: Scalar = Fraction(0)
        for (eq, et), c in self.coeffs.items():
            total += c * Fraction(q) ** eq * Fraction(t) ** et
        if total.denominator == 1:
            return int(total)
        return total

    def swap_qt(self) -> "BiPoly":
        return BiPoly({(et, eq): c for (eq, et), c in self.coeffs.items()})

    def subs_t_q_inverse(self) -> LaurentPoly:
        """Substitute ``t = 1/q``."""
        out: dict[int, int] = {}
        for (eq, et), c in self.coeffs.items():
            e = eq - et
            out[e] = out.get(e, 0) + c
        return LaurentPoly(_clean(out))

    def _div_linear_q(self, root_sign: int) -> "BiPoly":
        """Exact division by ``q - 1`` (``root_sign=+1``); per-``t``-slice
        synthetic division."""
        slices: dict[int, dict[int, int]] = {}
        for (eq, et), c in self.coeffs.items():
            slices.setdefault(et, {})[eq] = c
        out: dict[tuple[int, int], int] = {}
        for et, sl in slices.items():
            quo = LaurentPoly(sl).divexact(LaurentPoly({1: 1, 0: -root_sign}))
            for eq, c in quo.coeffs.items():
                out[(eq, et)] = c
        return BiPoly(out)

    def divexact_q_minus_1(self) -> "BiPoly":
        return self._div_linear_q(1)

    def divexact_one_minus_t(self) -> "BiPoly":
        """Exact division by ``1 - t``."""
        quo_t_minus_1 = self.swap_qt()._div_linear_q(1).swap_qt()
        return -quo_t_minus_1

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        def mono(eq: int, et: int) -> str:
            parts = []
            if eq:
                parts.append("q" if eq == 1 else f"q^{eq}")
            if et:
                parts.append("t" if et == 1 else f"t^{et}")
            return "*".join(parts) if parts else ""

        keys = sorted(self.coeffs,
                      key=lambda k: (-(k[0] + k[1]), -k[0], -k[1]))
        parts = []
        for key in keys:
            c = self.coeffs[key]
            m = mono(*key)
            if not m:
                term = str(abs(c))
            else:
                term = m if abs(c) == 1 else f"{abs(c)}*{m}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self.coeffs!r})"

    def to_dict(self) -> list:
        return [[eq, et, c]
                for (eq, et), c in sorted(self.coeffs.items())]

    @classmethod
    def from_dict(cls, data: Sequence) -> "BiPoly":
        try:
            return cls({(int(eq), int(et)): int(c) for eq, et, c in data})
        except (TypeError, ValueError) as exc:
            raise DomainError(f"malformed polynomial record: {data!r}") from exc


# ---------------------------------------------------------------------------
# Kostant partitions of the long translation's weight
# ---------------------------------------------------------------------------


def lambda_weight(n: int) -> tuple[int, ...]:
    """The weight of the long translation in simple-root coordinates.

    Derived from the window: entry ``i`` moves by ``n * v_i``, and the
    partial sums of ``(v_1, ..., v_n)`` are the simple-root coordinates.
    The result is ``(1, 2, ..., n - 1)``.
    """
    lam = lambda_element(n)
    v = []
    for i in range(1, n + 1):
        delta = Fraction(lam.window[i - 1] - i, n)
        if delta.denominator != 1:
            raise InvariantViolation(
                f"window entry {i} of the long translation is not a "
                f"translation coordinate"
            )
        v.append(int(delta))
    coords = []
    total = 0
    for i in range(n - 1):
        total += v[i]
        coords.append(total)
    if total + v[n - 1] != 0:
        raise InvariantViolation(
            f"translation coordinates {v} do not sum to zero"
        )
    if any(c < 0 for c in coords):
        raise InvariantViolation(
            f"weight of the long translation has a negative coordinate: "
            f"{coords}"
        )
    return tuple(coords)


KostantPartition = tuple[tuple[tuple[int, int], int], ...]


def kostant_partitions(n: int) -> list[KostantPartition]:
    """All ways to write the long translation's weight as a nonnegative
    combination of positive roots.

    A positive root is the interval ``(a, b)`` with ``1 <= a <= b <= n - 1``
    (the sum of consecutive simple roots ``a..b``).  Each partition is a
    tuple of ``((a, b), multiplicity)`` pairs with positive multiplicity,
    sorted by interval; partitions are in lexicographic order of their
    multiplicity vectors.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    target = list(lambda_weight(n))
    intervals = [(a, b) for a in range(1, n) for b in range(a, n)]
    results: list[KostantPartition] = []
    chosen: list[tuple[tuple[int, int], int]] = []

    def recurse(idx: int, remaining: list[int]) -> None:
        if idx == len(intervals):
            if all(r == 0 for r in remaining):
                results.append(tuple(chosen))
            return
        a, b = intervals[idx]
        covered = range(a - 1, b)
        max_mult = min(remaining[i] for i in covered)
        # Later intervals cannot cover coordinates before a - 1, so any
        # residue there must already be zero once we pass position a - 1.
        for mult in range(max_mult + 1):
            nxt = remaining[:]
            for i in covered:
                nxt[i] -= mult
            if all(nxt[i] == 0 for i in range(a - 1)
                   if not _still_coverable(intervals, idx + 1, i)):
                if mult:
                    chosen.append(((a, b), mult))
                recurse(idx + 1, nxt)
                if mult:
                    chosen.pop()

    def _still_coverable(ivs, start, coord):
        return any(iv[0] - 1 <= coord <= iv[1] - 1 for iv in ivs[start:])

    recurse(0, target)
    return results


# ---------------------------------------------------------------------------
# The three point counts
# ---------------------------------------------------------------------------


def opdam_bracket(k: int) -> LaurentPoly:
    """The one-variable bracket ``(q-1)^2 * (q^k - q^-k) / (q (q - 1/q))``
    = ``(q-1)^2 * sum_i q^(2i - k)`` for ``i = 0..k-1``."""
    if k < 1:
        raise DomainError(f"bracket needs k >= 1, got {k}")
    core = LaurentPoly({2 * i - k: 1 for i in range(k)})
    return (LaurentPoly({1: 1, 0: -1}) ** 2) * core


def haglund_bracket(k: int) -> BiPoly:
    """The two-variable bracket ``(q-1)(1-t) * (q^k - t^k)/(q - t)``
    = ``(q-1)(1-t) * sum_i q^i t^(k-1-i)``."""
    if k < 1:
        raise DomainError(f"bracket needs k >= 1, got {k}")
    core = BiPoly({(i, k - 1 - i): 1 for i in range(k)})
    q_minus_1 = BiPoly({(1, 0): 1, (0, 0): -1})
    one_minus_t = BiPoly({(0, 0): 1, (0, 1): -1})
    return q_minus_1 * one_minus_t * core


def opdam_point_count(n: int) -> LaurentPoly:
    """Point count via the trace formula: ``q^(n(n-1)/2)`` times the sum over
    Kostant partitions of products of one-variable brackets of the
    multiplicities.  The result is a genuine polynomial (no negative
    exponents)."""
    total = LaurentPoly.zero()
    for partition in kostant_partitions(n):
        prod = LaurentPoly.one()
        for _interval, mult in partition:
            prod = prod * opdam_bracket(mult)
        total = total + prod
    result = total.shift(n * (n - 1) // 2)
    if not result.is_zero() and result.valuation() < 0:
        raise InvariantViolation(
            f"trace-formula point count has negative exponents: {result}"
        )
    return result


def deodhar_point_count(n: int, jobs: int = 1) -> LaurentPoly:
    """Point count as a sum over all distinguished subwords of
    ``(q-1)^skips * q^(takes/2)``."""
    result = LaurentPoly.zero()
    q_minus_1 = LaurentPoly({1: 1, 0: -1})
    by_skips: dict[tuple[int, int], int] = {}
    for u in enumerate_distinguished(n, jobs=jobs):
        takes = u.take_count()
        if takes % 2:
            raise InvariantViolation(
                f"distinguished subword with an odd number of takes: "
                f"{u.indicator}"
            )
        key = (len(u.skips()), takes // 2)
        by_skips[key] = by_skips.get(key, 0) + 1
    for (skips, half_takes), count in sorted(by_skips.items()):
        result = result + (q_minus_1 ** skips).shift(half_takes) * count
    return result


def haglund_sum(n: int) -> BiPoly:
    """The undivided sum over Kostant partitions of products of two-variable
    brackets of the multiplicities."""
    total = BiPoly.zero()
    for partition in kostant_partitions(n):
        prod = BiPoly.one()
        for _interval, mult in partition:
            prod = prod * haglund_bracket(mult)
        total = total + prod
    return total


def haglund_hilbert(n: int) -> BiPoly:
    """The two-variable Hilbert series: the bracket sum divided exactly by
    ``((q-1)(1-t))^(n-1)``.

    At ``q = t = 1`` this evaluates to ``n^(n-2)``, and its coefficients are
    nonnegative.
    """
    total = haglund_sum(n)
    for _ in range(n - 1):
        total = total.divexact_q_minus_1()
        total = total.divexact_one_minus_t()
    return total


def hilbert_specialization(n: int) -> LaurentPoly:
    """``q^((n-1)(n-2)/2)`` times the Hilbert series at ``t = 1/q``; equals
    ``[n]_q^(n-2)``."""
    spec = haglund_hilbert(n).subs_t_q_inverse()
    return spec.shift((n - 1) * (n - 2) // 2)


def closed_form(n: int) -> LaurentPoly:
    """``(q - 1)^(2n-2) * [n]_q^(n-2)``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return (LaurentPoly({1: 1, 0: -1}) ** (2 * n - 2)) * (qint(n) ** (n - 2))


def cayley_limit(point_count: LaurentPoly, n: int) -> int:
    """Divide a point count by ``(q-1)^(2n-2)`` and evaluate at ``q = 1``.

    Terms divisible by a higher power of ``q - 1`` vanish in the limit, so
    this extracts exactly the contribution of the maximal subwords.
    """
    quotient = point_count.divexact(LaurentPoly({1: 1, 0: -1}) ** (2 * n - 2))
    value = quotient(1)
    if not isinstance(value, int):
        raise InvariantViolation(f"limit is not an integer: {value}")
    return value


def cayley_count(n: int, method: str = "closed") -> int:
    """The number of labeled trees on ``n`` vertices, ``n^(n-2)``, computed
    from the chosen point count ("closed", "opdam", "deodhar", or
    "haglund")."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if method == "closed":
        return cayley_limit(closed_form(n), n)
    if method == "opdam":
        return cayley_limit(opdam_point_count(n), n)
    if method == "deodhar":
        return cayley_limit(deodhar_point_count(n), n)
    if method == "haglund":
        value = haglund_hilbert(n)(1, 1)
        if not isinstance(value, int):
            raise InvariantViolation(f"Hilbert series at (1, 1) is not an "
                                     f"integer: {value}")
        return value
    raise DomainError(
        f"unknown method {method!r}; expected closed, opdam, deodhar, "
        f"or haglund"
    )
