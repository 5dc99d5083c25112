"""Reflection factorizations of the long translation.

A factorization is an ordered tuple of affine reflections; its product is
taken with the rightmost factor acting first.  The central predicates are
*tree-like* (the reflections admit an increasing chain of endpoint
representatives) and *cyclic* (tree-like with rotation-compatible neighbor
sequences), each checked two independent ways that are asserted to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .affine import (AffinePerm, DomainError, InvariantViolation, Reflection,
                     compose_all, lambda_element, residue)


class Direction(Enum):
    INCREASES = "increases"
    DECREASES = "decreases"
    FIXES = "fixes"


@dataclass(frozen=True)
class Factorization:
    """An ordered sequence of reflections of a common rank."""

    n: int
    refs: tuple[Reflection, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.refs, tuple):
            object.__setattr__(self, "refs", tuple(self.refs))
        if not self.refs:
            raise DomainError("factorization must contain at least one reflection")
        for r in self.refs:
            if not isinstance(r, Reflection) or r.n != self.n:
                raise DomainError(
                    f"all factors must be rank-{self.n} reflections, got {r!r}"
                )

    def __len__(self) -> int:
        return len(self.refs)

    def product(self) -> AffinePerm:
        return compose_all((r.as_perm() for r in self.refs), self.n)

    def canonical_refs(self) -> tuple[Reflection, ...]:
        return tuple(r.canonical() for r in self.refs)

    def to_dict(self) -> dict:
        return {"n": self.n, "refs": [r.to_dict() for r in self.refs]}

    @classmethod
    def from_dict(cls, data: dict) -> "Factorization":
        try:
            refs = tuple(Reflection.from_dict(d) for d in data["refs"])
            return cls(int(data["n"]), refs)
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed factorization record: {data!r}") from exc


def is_minimal(fact: Factorization) -> bool:
    """Does ``fact`` factor the long translation with the fewest reflections?

    The long translation has reflection length ``2n - 2``, so minimality is
    exactly: ``2n - 2`` factors whose product is the long translation.
    """
    n = fact.n
    return len(fact) == 2 * n - 2 and fact.product() == lambda_element(n)


def _require_minimal(fact: Factorization) -> None:
    if not is_minimal(fact):
        raise DomainError(
            "expected a minimal factorization of the long translation "
            f"({2 * fact.n - 2} reflections multiplying to it)"
        )


def residue_chained(fact: Factorization) -> bool:
    """Direct chaining test: each factor's low residue continues the previous
    factor's high residue."""
    n = fact.n
    return all(
        (nxt.lo - cur.hi) % n == 0
        for cur, nxt in zip(fact.refs, fact.refs[1:])
    )


def chain_form(fact: Factorization) -> tuple[int, ...] | None:
    """The increasing chain ``a_0 < a_1 < ... `` with ``r_k = ((a_{k-1}, a_k))``
    and all gaps below ``n``, or ``None`` if no such chain exists.

    All ``n`` starting residues are tried; at most one can succeed because the
    start must match the first factor's low residue.
    """
    n = fact.n
    found: tuple[int, ...] | None = None
    for start in range(n):
        a = start
        chain = [start]
        ok = True
        for r in fact.refs:
            if (r.lo - a) % n != 0 or r.gap >= n:
                ok = False
                break
            a += r.gap
            chain.append(a)
        if ok:
            if found is not None:
                raise InvariantViolation(
                    "two distinct starting residues produced endpoint chains"
                )
            found = tuple(chain)
    return found


def is_tree_like(fact: Factorization) -> bool:
    """Tree-likeness of a minimal factorization of the long translation.

    Checked two ways — residue chaining and chain extraction — which are
    asserted to agree; a successful chain must start in the zero class.
    """
    _require_minimal(fact)
    chain = chain_form(fact)
    chained = residue_chained(fact)
    if (chain is not None) != chained:
        raise InvariantViolation(
            "residue chaining and chain extraction disagree on "
            f"{[str(r) for r in fact.refs]}"
        )
    if chain is not None and chain[0] % fact.n != 0:
        raise InvariantViolation(
            f"endpoint chain of a tree-like factorization starts at {chain[0]}, "
            "not in the zero residue class"
        )
    return chain is not None


def _require_tree_like(fact: Factorization) -> tuple[int, ...]:
    _require_minimal(fact)
    chain = chain_form(fact)
    if chain is None:
        raise DomainError("expected a tree-like factorization")
    return chain


def chain_reflections(fact: Factorization) -> Factorization:
    """The same factorization rewritten with chain representatives."""
    chain = _require_tree_like(fact)
    refs = tuple(Reflection(fact.n, chain[i], chain[i + 1])
                 for i in range(len(fact)))
    return Factorization(fact.n, refs)


def suffix_images(fact: Factorization, k: int) -> tuple[int, ...]:
    """Images ``(r_l ... r_last)(k)`` for ``l = 1..len``, plus ``k`` itself last."""
    values = [k]
    for r in reversed(fact.refs):
        values.append(r.apply(values[-1]))
    return tuple(reversed(values))


def direction(fact: Factorization, index: int, k: int) -> Direction:
    """Whether the ``index``-th factor (1-based) increases, decreases, or
    fixes the running image of ``k`` under the suffix products."""
    if not 1 <= index <= len(fact):
        raise DomainError(f"index must be in 1..{len(fact)}, got {index}")
    images = suffix_images(fact, k)
    before, after = images[index], images[index - 1]
    if after > before:
        return Direction.INCREASES
    if after < before:
        return Direction.DECREASES
    return Direction.FIXES


def increases(fact: Factorization, k: int) -> tuple[int, ...]:
    """1-based indices of the factors that increase ``k``."""
    images = suffix_images(fact, k)
    return tuple(i for i in range(1, len(fact) + 1)
                 if images[i - 1] > images[i])


def decreases(fact: Factorization, k: int) -> tuple[int, ...]:
    """1-based indices of the factors that decrease ``k``."""
    images = suffix_images(fact, k)
    return tuple(i for i in range(1, len(fact) + 1)
                 if images[i - 1] < images[i])


@dataclass(frozen=True)
class ReflectionPair:
    """The two factors increasing a fixed residue ``k``, with their shared
    partner residue ``b``."""

    k: int
    b: int
    left: int
    right: int


def pair_structure(fact: Factorization) -> dict[int, ReflectionPair]:
    """For each residue ``k`` in ``1..n-1``, the pair of factors increasing it.

    Asserts the structural facts that make the pairs well formed: exactly two
    increasers per residue, coinciding with the first and last factors using
    that residue; the expected canonical shapes of the two ends; and that the
    pairs partition the factor indices.
    """
    n = fact.n
    chained = chain_reflections(fact)
    pairs: dict[int, ReflectionPair] = {}
    used: set[int] = set()
    for k in range(1, n):
        idxs = increases(fact, k)
        if len(idxs) != 2:
            raise InvariantViolation(
                f"residue {k} is increased by {len(idxs)} factors, expected 2"
            )
        left, right = idxs
        using = tuple(i for i, r in enumerate(chained.refs, start=1)
                      if k in r.residues())
        if (using[0], using[-1]) != (left, right):
            raise InvariantViolation(
                f"increasers of {k} are not the first/last factors using it"
            )
        others = fact.refs[left - 1].residues() - {k}
        if len(others) != 1:
            raise InvariantViolation(f"factor {left} does not involve residue {k}")
        (b,) = others
        if b > k:
            want_left = Reflection(n, b - n, k)
            want_right = Reflection(n, k, b)
        else:
            want_left = Reflection(n, b, k)
            want_right = Reflection(n, k - n, b)
        if fact.refs[left - 1].canonical() != want_left:
            raise InvariantViolation(
                f"left end of pair {k} is {fact.refs[left - 1]}, "
                f"expected {want_left} up to shift"
            )
        if fact.refs[right - 1].canonical() != want_right:
            raise InvariantViolation(
                f"right end of pair {k} is {fact.refs[right - 1]}, "
                f"expected {want_right} up to shift"
            )
        if {left, right} & used:
            raise InvariantViolation("pairs do not partition the factor indices")
        used.update((left, right))
        pairs[k] = ReflectionPair(k=k, b=b, left=left, right=right)
    if used != set(range(1, len(fact) + 1)):
        raise InvariantViolation("pairs do not cover all factor indices")
    return pairs


def nesting_violations(fact: Factorization) -> list[str]:
    """Violations of the pair-nesting laws (empty for tree-like input).

    For the pair ``(L, R)`` of each residue ``k``: no factor outside
    ``[L, R]`` uses residue ``k``; no factor strictly inside uses the partner
    residue ``b``; and factors strictly inside have their pair partner
    strictly inside too.
    """
    pairs = pair_structure(fact)
    chained = chain_reflections(fact)
    partner: dict[int, int] = {}
    for pair in pairs.values():
        partner[pair.left] = pair.right
        partner[pair.right] = pair.left
    out: list[str] = []
    for k, pair in pairs.items():
        left, right, b = pair.left, pair.right, pair.b
        for i, r in enumerate(chained.refs, start=1):
            inside = left < i < right
            if not left <= i <= right and k in r.residues():
                out.append(f"factor {i} uses residue {k} outside its pair")
            if inside and i not in (left, right) and b in r.residues():
                out.append(
                    f"factor {i} uses partner residue {b} inside pair of {k}"
                )
            if inside and not left < partner[i] < right:
                out.append(
                    f"factor {i} lies inside pair of {k} but its partner "
                    f"{partner[i]} does not"
                )
    return out


def neighbor_sequence(fact: Factorization, k: int) -> tuple[int, ...]:
    """High-end residues of the chain factors whose low end has residue ``k``,
    in factor order (``k`` in ``1..n``)."""
    n = fact.n
    if not 1 <= k <= n:
        raise DomainError(f"residue must be in 1..{n}, got {k}")
    chained = chain_reflections(fact)
    return tuple(r.hi_residue for r in chained.refs if r.lo_residue == k)


def neighbor_sequences(fact: Factorization) -> dict[int, tuple[int, ...]]:
    n = fact.n
    chained = chain_reflections(fact)
    out: dict[int, list[int]] = {k: [] for k in range(1, n + 1)}
    for r in chained.refs:
        out[r.lo_residue].append(r.hi_residue)
    return {k: tuple(v) for k, v in out.items()}


def m_sequence(fact: Factorization) -> tuple[int, ...]:
    """For each ``j``, the image of 0 under the conjugate
    ``(r_1 ... r_{j-1}) r_j (r_{j-1} ... r_1)``.

    Each conjugate is asserted to be a reflection through the zero class; the
    values are computed from the endpoint chain and cross-checked by direct
    conjugation.
    """
    chain = _require_tree_like(fact)
    n = fact.n
    prefix = AffinePerm.identity(n)
    values: list[int] = []
    for j, r in enumerate(fact.refs, start=1):
        m = prefix.apply(chain[j])
        perm = r.as_perm()
        conj = prefix * perm * prefix.inverse()
        if conj.apply(0) == 0:
            raise InvariantViolation(
                f"conjugate of factor {j} fixes 0; it must move the zero class"
            )
        if conj.apply(0) != m or conj.apply(m) != 0:
            raise InvariantViolation(
                f"conjugate of factor {j} moves 0 to {conj.apply(0)}, "
                f"but the chain predicts {m}"
            )
        values.append(m)
        prefix = prefix * perm
    return tuple(values)


def _rotation_strictly_increasing(seq: tuple[int, ...]) -> bool:
    if len(seq) <= 1:
        return True
    if len(set(seq)) != len(seq):
        return False
    for shift in range(len(seq)):
        rotated = seq[shift:] + seq[:shift]
        if all(a < b for a, b in zip(rotated, rotated[1:])):
            return True
    return False


def is_cyclic(fact: Factorization) -> bool:
    """Cyclic factorizations: tree-like, with the neighbor sequence of ``n``
    strictly increasing and every other neighbor sequence strictly increasing
    up to rotation after its final entry is replaced by its own residue.

    Cross-checked against strict monotonicity of the m-sequence; disagreement
    raises :class:`InvariantViolation`.
    """
    _require_minimal(fact)
    if chain_form(fact) is None:
        return False
    n = fact.n
    seqs = neighbor_sequences(fact)
    ok = all(a < b for a, b in zip(seqs[n], seqs[n][1:]))
    if ok:
        for k in range(1, n):
            seq = seqs[k]
            if not seq:
                raise InvariantViolation(
                    f"tree-like factorization with empty neighbor sequence at {k}"
                )
            if not _rotation_strictly_increasing(seq[:-1] + (k,)):
                ok = False
                break
    ms = m_sequence(fact)
    monotone = all(a < b for a, b in zip(ms, ms[1:]))
    if ok != monotone:
        raise InvariantViolation(
            "neighbor-sequence and m-sequence cyclicity tests disagree on "
            f"{[str(r) for r in fact.refs]}"
        )
    return ok


def cyclically_ordered(x: int, y: int, z: int) -> bool:
    """Do distinct values ``x, y, z`` appear in increasing cyclic order?"""
    return (x < y < z) or (z < x < y) or (y < z < x)


def residue_clock_test(a: int, v: int, b: int, n: int) -> bool:
    """Decide ``a + n < b`` from residues alone, given
    ``v - n < a < v < b < v + n``.

    The window hypothesis makes the answer expressible through the cyclic
    order of the three residues; tests validate this against the direct
    comparison exhaustively.
    """
    if not (v - n < a < v < b < v + n):
        raise DomainError(
            f"expected {v - n} < {a} < {v} < {b} < {v + n} (rank {n})"
        )
    return cyclically_ordered(residue(a, n), residue(b, n), residue(v, n))
