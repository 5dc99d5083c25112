"""Window arithmetic for affine permutations, reflections, and cyclic words.

An affine permutation of rank ``n`` is a bijection ``w`` of the integers
satisfying ``w(i + n) = w(i) + n`` whose window values ``w(1), ..., w(n)``
sum to ``n(n+1)/2``.  It is stored by that window.  Products compose right
to left: ``(u * v)(k) = u(v(k))``, so in a product the rightmost factor acts
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed; this should never happen."""


def residue(k: int, n: int) -> int:
    """Representative of ``k`` modulo ``n`` in the window range ``1..n``."""
    return (k - 1) % n + 1


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"rank must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class AffinePerm:
    """An affine permutation stored by its window ``(w(1), ..., w(n))``."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        n = self.n
        if not isinstance(self.window, tuple):
            object.__setattr__(self, "window", tuple(self.window))
        window = self.window
        if len(window) != n:
            raise DomainError(f"window must have length {n}, got {len(window)}")
        if any(not isinstance(v, int) for v in window):
            raise DomainError("window entries must be integers")
        if len({residue(v, n) for v in window}) != n:
            raise DomainError(f"window residues must be distinct mod {n}: {window}")
        if sum(window) != n * (n + 1) // 2:
            raise DomainError(
                f"window must sum to {n * (n + 1) // 2}, got {sum(window)}"
            )

    @classmethod
    def identity(cls, n: int) -> "AffinePerm":
        return cls(n, tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def apply(self, k: int) -> int:
        """Image of any integer ``k``."""
        idx = (k - 1) % self.n
        shift = (k - 1 - idx) // self.n
        return self.window[idx] + self.n * shift

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        if not isinstance(other, AffinePerm):
            return NotImplemented
        if other.n != self.n:
            raise DomainError("cannot compose permutations of different ranks")
        return AffinePerm(self.n, tuple(self.apply(other.apply(i))
                                        for i in range(1, self.n + 1)))

    def inverse(self) -> "AffinePerm":
        n = self.n
        out = [0] * n
        for i, v in enumerate(self.window, start=1):
            r = residue(v, n)
            out[r - 1] = i - (v - r)
        return AffinePerm(n, tuple(out))

    def has_descent(self, i: int) -> bool:
        """Right descent at ``i`` with ``0 <= i < n``: is ``w(i) > w(i+1)``?"""
        if not 0 <= i < self.n:
            raise DomainError(f"descent index must be in 0..{self.n - 1}, got {i}")
        return self.apply(i) > self.apply(i + 1)

    def descents(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.has_descent(i))

    def times_simple(self, j: int) -> "AffinePerm":
        """Right product with the simple reflection swapping ``j`` and ``j+1``."""
        n, w = self.n, self.window
        if not 0 <= j < n:
            raise DomainError(f"simple index must be in 0..{n - 1}, got {j}")
        if j == 0:
            return AffinePerm(n, (w[n - 1] - n,) + w[1:n - 1] + (w[0] + n,))
        values = list(w)
        values[j - 1], values[j] = values[j], values[j - 1]
        return AffinePerm(n, tuple(values))

    def length(self) -> int:
        """Coxeter length, by stripping right descents greedily."""
        count = 0
        current = self
        while not current.is_identity():
            for i in range(current.n):
                if current.has_descent(i):
                    current = current.times_simple(i)
                    count += 1
                    break
            else:
                raise InvariantViolation(
                    "non-identity affine permutation with no right descent"
                )
        return count

    def to_dict(self) -> dict:
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_dict(cls, data: dict) -> "AffinePerm":
        try:
            return cls(int(data["n"]), tuple(int(v) for v in data["window"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed permutation record: {data!r}") from exc


def compose_all(perms: Iterable[AffinePerm], n: int) -> AffinePerm:
    """Product of a sequence, rightmost factor applied first."""
    result = AffinePerm.identity(n)
    for p in perms:
        result = result * p
    return result


@dataclass(frozen=True)
class Reflection:
    """The affine reflection swapping ``lo + kn`` and ``hi + kn`` for all k.

    Stored with explicit integer representatives ``lo < hi``; shifting both by
    a multiple of ``n`` yields the same reflection, and :meth:`canonical`
    picks the representative with ``hi`` in ``1..n``.
    """

    n: int
    lo: int
    hi: int

    def __post_init__(self) -> None:
        _check_rank(self.n)
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise DomainError("reflection endpoints must be integers")
        if self.lo >= self.hi:
            raise DomainError(
                f"reflection endpoints must satisfy lo < hi, got ({self.lo}, {self.hi})"
            )
        if (self.hi - self.lo) % self.n == 0:
            raise DomainError(
                f"endpoints {self.lo}, {self.hi} are congruent mod {self.n}; "
                "they must lie in distinct residue classes"
            )

    @property
    def gap(self) -> int:
        return self.hi - self.lo

    def shift(self, k: int) -> "Reflection":
        return Reflection(self.n, self.lo + k * self.n, self.hi + k * self.n)

    def canonical(self) -> "Reflection":
        offset = self.hi - residue(self.hi, self.n)
        return Reflection(self.n, self.lo - offset, self.hi - offset)

    @property
    def lo_residue(self) -> int:
        return residue(self.lo, self.n)

    @property
    def hi_residue(self) -> int:
        return residue(self.hi, self.n)

    def residues(self) -> frozenset[int]:
        return frozenset((self.lo_residue, self.hi_residue))

    def is_negative(self) -> bool:
        """True when the higher endpoint has the smaller residue."""
        return self.hi_residue < self.lo_residue

    def apply(self, k: int) -> int:
        if (k - self.lo) % self.n == 0:
            return k + self.gap
        if (k - self.hi) % self.n == 0:
            return k - self.gap
        return k

    def as_perm(self) -> AffinePerm:
        return AffinePerm(self.n, tuple(self.apply(i)
                                        for i in range(1, self.n + 1)))

    @classmethod
    def simple(cls, n: int, j: int) -> "Reflection":
        if not 0 <= j < n:
            raise DomainError(f"simple index must be in 0..{n - 1}, got {j}")
        return cls(n, j, j + 1)

    @classmethod
    def from_perm(cls, perm: AffinePerm) -> "Reflection":
        n = perm.n
        moved = [i for i in range(1, n + 1) if perm.apply(i) != i]
        if len(moved) != 2:
            raise DomainError(f"{perm.window} does not move exactly two residues")
        a = moved[0]
        b = perm.apply(a)
        ref = cls(n, min(a, b), max(a, b))
        if ref.as_perm() != perm:
            raise DomainError(f"{perm.window} is not a reflection")
        return ref

    def to_dict(self) -> dict:
        return {"n": self.n, "lo": self.lo, "hi": self.hi}

    @classmethod
    def from_dict(cls, data: dict) -> "Reflection":
        try:
            return cls(int(data["n"]), int(data["lo"]), int(data["hi"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed reflection record: {data!r}") from exc

    def __str__(self) -> str:
        return f"(({self.lo},{self.hi}))"


def lambda_element(n: int) -> AffinePerm:
    """The long translation: adds ``n`` off the zero class, which it drops."""
    _check_rank(n)
    window = tuple(range(n + 1, 2 * n)) + (-n * (n - 2),)
    return AffinePerm(n, window)


@dataclass(frozen=True)
class Word:
    """A word in the simple reflections ``s_0, ..., s_{n-1}``."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if any(not isinstance(j, int) or not 0 <= j < self.n
               for j in self.letters):
            raise DomainError(f"letters must lie in 0..{self.n - 1}")

    @classmethod
    def lambda_word(cls, n: int) -> "Word":
        """The repeated-cycle word ``(s_0 s_1 ... s_{n-1})^(n-1)``."""
        _check_rank(n)
        return cls(n, tuple((p - 1) % n for p in range(1, n * (n - 1) + 1)))

    def __len__(self) -> int:
        return len(self.letters)

    def letter(self, p: int) -> int:
        """Letter index at 1-based position ``p``."""
        if not 1 <= p <= len(self.letters):
            raise DomainError(f"position must be in 1..{len(self.letters)}, got {p}")
        return self.letters[p - 1]

    def position_reflection(self, p: int) -> Reflection:
        """The letter at position ``p`` of the repeated-cycle word, as the
        reflection ``((p-1, p))``."""
        self.letter(p)  # bounds check
        return Reflection(self.n, p - 1, p)

    def product(self) -> AffinePerm:
        result = AffinePerm.identity(self.n)
        for j in self.letters:
            result = result.times_simple(j)
        return result

    def prefixes(self) -> Iterator[AffinePerm]:
        """All prefix products, starting with the identity (len+1 of them)."""
        result = AffinePerm.identity(self.n)
        yield result
        for j in self.letters:
            result = result.times_simple(j)
            yield result

    def to_dict(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_dict(cls, data: dict) -> "Word":
        try:
            return cls(int(data["n"]), tuple(int(v) for v in data["letters"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed word record: {data!r}") from exc
