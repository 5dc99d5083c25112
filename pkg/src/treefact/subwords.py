"""Subwords of the repeated-cycle word and their combinatorics.

A subword of the rank-``n`` repeated-cycle word ``(s_0 s_1 ... s_{n-1})^(n-1)``
is stored as an indicator vector over its ``n(n-1)`` positions: 1 = letter
taken, 0 = letter skipped.  *Distinguished* subwords never skip a letter that
would shorten the running product; *maximal* ones are the identity-product
subwords with the fewest possible skips (``2n - 2``), whose skipped positions
carry a minimal factorization of the long translation.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .affine import (AffinePerm, DomainError, InvariantViolation, Reflection,
                     Word, _check_rank)
from .factorization import Factorization, is_cyclic, m_sequence


@dataclass(frozen=True)
class Subword:
    """An indicator vector over the positions of the repeated-cycle word."""

    n: int
    indicator: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rank(self.n)
        if not isinstance(self.indicator, tuple):
            object.__setattr__(self, "indicator", tuple(self.indicator))
        m = self.n * (self.n - 1)
        if len(self.indicator) != m:
            raise DomainError(
                f"indicator must have length {m}, got {len(self.indicator)}"
            )
        if any(b not in (0, 1) for b in self.indicator):
            raise DomainError("indicator entries must be 0 or 1")

    @property
    def word_length(self) -> int:
        return len(self.indicator)

    def word(self) -> Word:
        return Word.lambda_word(self.n)

    def letter(self, p: int) -> int:
        """Letter index at 1-based position ``p``."""
        if not 1 <= p <= self.word_length:
            raise DomainError(f"position must be in 1..{self.word_length}, got {p}")
        return (p - 1) % self.n

    def skips(self) -> tuple[int, ...]:
        return tuple(p for p, b in enumerate(self.indicator, start=1) if b == 0)

    def take_count(self) -> int:
        return sum(self.indicator)

    def prefix_products(self) -> tuple[AffinePerm, ...]:
        """Products of the taken letters among the first ``p`` positions,
        for ``p = 0..m``."""
        out = [AffinePerm.identity(self.n)]
        for p, bit in enumerate(self.indicator, start=1):
            out.append(out[-1].times_simple((p - 1) % self.n) if bit else out[-1])
        return tuple(out)

    def product(self) -> AffinePerm:
        result = AffinePerm.identity(self.n)
        for p, bit in enumerate(self.indicator, start=1):
            if bit:
                result = result.times_simple((p - 1) % self.n)
        return result

    def to_dict(self) -> dict:
        return {"n": self.n, "indicator": list(self.indicator)}

    @classmethod
    def from_dict(cls, data: dict) -> "Subword":
        try:
            return cls(int(data["n"]), tuple(int(b) for b in data["indicator"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed subword record: {data!r}") from exc


def inversion_table(u: Subword) -> tuple[Reflection, ...]:
    """For each position ``p``, the reflection through the prefix images of
    ``p - 1`` and ``p``: ``((w(p-1), w(p)))`` for ``w`` the product of the
    letters taken before ``p``."""
    prefixes = u.prefix_products()
    out = []
    for p in range(1, u.word_length + 1):
        w = prefixes[p - 1]
        a, b = w.apply(p - 1), w.apply(p)
        out.append(Reflection(u.n, min(a, b), max(a, b)))
    return tuple(out)


def skip_reflections(u: Subword) -> Factorization:
    """The inversion-table entries at the skipped positions, in order."""
    table = inversion_table(u)
    refs = tuple(table[p - 1] for p in u.skips())
    if not refs:
        raise DomainError("subword has no skips")
    return Factorization(u.n, refs)


def is_distinguished(u: Subword) -> bool:
    """True when every position whose letter would shorten the running
    product is taken."""
    w = AffinePerm.identity(u.n)
    for p, bit in enumerate(u.indicator, start=1):
        j = (p - 1) % u.n
        if w.apply(j) > w.apply(j + 1) and not bit:
            return False
        if bit:
            w = w.times_simple(j)
    return True


def is_maximal_distinguished(u: Subword) -> bool:
    """Identity-product subwords with exactly ``2n - 2`` skips.

    Such subwords are automatically distinguished; that fact is asserted as a
    cross-check.
    """
    if len(u.skips()) != 2 * u.n - 2:
        return False
    if not u.product().is_identity():
        return False
    if not is_distinguished(u):
        raise InvariantViolation(
            "identity-product subword with minimal skips is not distinguished: "
            f"{u.indicator}"
        )
    return True


def rotate(u: Subword) -> Subword:
    """Cyclic right shift of the indicator by one position."""
    ind = u.indicator
    return Subword(u.n, (ind[-1],) + ind[:-1])


def rotation_orbit(u: Subword) -> tuple[Subword, ...]:
    orbit = [u]
    current = rotate(u)
    while current != u:
        orbit.append(current)
        current = rotate(current)
    return tuple(orbit)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
#
# Both enumerators walk the positions left to right, maintaining the window
# and exact Coxeter length of the running product.  Sound prunes:
#   * a letter that would shorten the product must be taken (definition of
#     distinguished; for the maximal enumeration this is the
#     minimal-skips-are-distinguished fact, cross-checked elsewhere);
#   * if the two prefix images at the current position differ by n or more,
#     no completion multiplies to the identity (inversion-gap bound);
#   * if any window value strays more than n - 2 from its seat, no completion
#     multiplies to the identity (segment-displacement bound);
#   * the remaining take budget must cover the current length, with matching
#     parity where the budget is exact.
# The displacement and gap bounds are theorems validated independently by the
# test suite, and the enumerations themselves are compared against unpruned
# brute force at small rank.


def _window_values(window: tuple[int, ...], n: int, j: int) -> tuple[int, int]:
    left = window[n - 1] - n if j == 0 else window[j - 1]
    right = window[j]
    return left, right


def _within_displacement(window: tuple[int, ...], n: int) -> bool:
    bound = n - 2
    return all(abs(v - i) <= bound for i, v in enumerate(window, start=1))


def _take(window: tuple[int, ...], n: int, j: int) -> tuple[int, ...]:
    if j == 0:
        return (window[n - 1] - n,) + window[1:n - 1] + (window[0] + n,)
    values = list(window)
    values[j - 1], values[j] = values[j], values[j - 1]
    return tuple(values)


def _dfs_maximal(n: int, pos: int, window: tuple[int, ...], length: int,
                 skips: int, bits: list[int], out: list[tuple[int, ...]]) -> None:
    m = n * (n - 1)
    budget = 2 * n - 2
    if pos == m:
        if skips == budget and length == 0:
            out.append(tuple(bits))
        return
    remaining = m - pos - 1
    j = pos % n
    left, right = _window_values(window, n, j)
    if abs(right - left) > n - 1:
        return
    descent = left > right

    # Skip branch first: outputs come out in ascending indicator order.
    if not descent and skips < budget:
        takes_left = remaining - (budget - skips - 1)
        if takes_left >= length and (takes_left - length) % 2 == 0:
            bits.append(0)
            _dfs_maximal(n, pos + 1, window, length, skips + 1, bits, out)
            bits.pop()

    new_window = _take(window, n, j)
    if _within_displacement(new_window, n):
        new_length = length - 1 if descent else length + 1
        takes_left = remaining - (budget - skips)
        if takes_left >= new_length and (takes_left - new_length) % 2 == 0:
            bits.append(1)
            _dfs_maximal(n, pos + 1, new_window, new_length, skips, bits, out)
            bits.pop()


def _dfs_distinguished(n: int, pos: int, window: tuple[int, ...], length: int,
                       bits: list[int], out: list[tuple[int, ...]]) -> None:
    m = n * (n - 1)
    if pos == m:
        if length == 0:
            out.append(tuple(bits))
        return
    remaining = m - pos - 1
    j = pos % n
    left, right = _window_values(window, n, j)
    if abs(right - left) > n - 1:
        return
    descent = left > right

    if not descent:
        bits.append(0)
        _dfs_distinguished(n, pos + 1, window, length, bits, out)
        bits.pop()

    new_window = _take(window, n, j)
    if _within_displacement(new_window, n):
        new_length = length - 1 if descent else length + 1
        if new_length <= remaining:
            bits.append(1)
            _dfs_distinguished(n, pos + 1, new_window, new_length, bits, out)
            bits.pop()


@dataclass(frozen=True)
class _Frontier:
    pos: int
    window: tuple[int, ...]
    length: int
    skips: int
    bits: tuple[int, ...]


def _frontier_states(n: int, kind: str, depth: int) -> list[_Frontier]:
    """All surviving prefix states at ``depth`` positions, in indicator order."""
    budget = 2 * n - 2
    states = [_Frontier(0, tuple(range(1, n + 1)), 0, 0, ())]
    for pos in range(depth):
        nxt: list[_Frontier] = []
        j = pos % n
        for st in states:
            left, right = _window_values(st.window, n, j)
            if abs(right - left) > n - 1:
                continue
            descent = left > right
            if not descent and (kind == "distinguished" or st.skips < budget):
                nxt.append(_Frontier(pos + 1, st.window, st.length,
                                     st.skips + 1, st.bits + (0,)))
            new_window = _take(st.window, n, j)
            if _within_displacement(new_window, n):
                new_length = st.length - 1 if descent else st.length + 1
                nxt.append(_Frontier(pos + 1, new_window, new_length,
                                     st.skips, st.bits + (1,)))
        states = nxt
    return states


def _complete_state(args: tuple) -> list[tuple[int, ...]]:
    kind, n, state = args
    out: list[tuple[int, ...]] = []
    if kind == "maximal":
        _dfs_maximal(n, state.pos, state.window, state.length, state.skips,
                     list(state.bits), out)
    else:
        _dfs_distinguished(n, state.pos, state.window, state.length,
                           list(state.bits), out)
    return out


def _enumerate(n: int, kind: str, jobs: int) -> list[Subword]:
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    m = n * (n - 1)
    if jobs == 1:
        out: list[tuple[int, ...]] = []
        if kind == "maximal":
            _dfs_maximal(n, 0, tuple(range(1, n + 1)), 0, 0, [], out)
        else:
            _dfs_distinguished(n, 0, tuple(range(1, n + 1)), 0, [], out)
        return [Subword(n, bits) for bits in out]

    depth = 1
    states = _frontier_states(n, kind, depth)
    while depth < m and len(states) < 4 * jobs:
        depth += 1
        states = _frontier_states(n, kind, depth)
    results: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_complete_state,
                              [(kind, n, st) for st in states]):
            results.extend(chunk)
    return [Subword(n, bits) for bits in results]


def enumerate_maximal(n: int, jobs: int = 1) -> list[Subword]:
    """All maximal subwords at rank ``n``, in ascending indicator order."""
    _check_rank(n)
    return _enumerate(n, "maximal", jobs)


def enumerate_distinguished(n: int, jobs: int = 1) -> list[Subword]:
    """All distinguished identity-product subwords, in ascending indicator
    order."""
    _check_rank(n)
    return _enumerate(n, "distinguished", jobs)


def orbit_sizes(n: int, jobs: int = 1) -> list[int]:
    """Sizes of the rotation orbits on the maximal subwords, ascending.

    Asserts that rotation maps the maximal set to itself.
    """
    all_max = {u.indicator for u in enumerate_maximal(n, jobs=jobs)}
    seen: set[tuple[int, ...]] = set()
    sizes: list[int] = []
    for ind in sorted(all_max):
        if ind in seen:
            continue
        orbit = rotation_orbit(Subword(n, ind))
        for v in orbit:
            if v.indicator not in all_max:
                raise InvariantViolation(
                    "rotation carried a maximal subword outside the maximal set"
                )
            seen.add(v.indicator)
        sizes.append(len(orbit))
    return sorted(sizes)


# ---------------------------------------------------------------------------
# Negative skips and pattern classes
# ---------------------------------------------------------------------------


def grid_cell(n: int, p: int) -> tuple[int, int]:
    """Row/column of 1-based position ``p`` in the ``n x (n-1)`` grid."""
    return (p - 1) // (n - 1) + 1, (p - 1) % (n - 1) + 1


def negative_skip_cells(u: Subword) -> tuple[tuple[int, int], ...]:
    """Grid cells of the skips whose inversion has its higher endpoint in a
    smaller residue class."""
    table = inversion_table(u)
    return tuple(grid_cell(u.n, p) for p in u.skips()
                 if table[p - 1].is_negative())


def skip_pattern_permutation(u: Subword) -> tuple[int, ...]:
    """The permutation ``w`` of ``1..n-1`` with ``w(col) = row`` over the
    negative-skip cells of a maximal subword.

    Asserts the pattern facts: exactly one negative skip per column, one per
    row except the last, none in the last row.
    """
    if not is_maximal_distinguished(u):
        raise DomainError("expected a maximal subword")
    n = u.n
    cells = negative_skip_cells(u)
    by_col: dict[int, int] = {}
    rows: set[int] = set()
    for row, col in cells:
        if row >= n:
            raise InvariantViolation(
                f"negative skip in the last grid row at {(row, col)}"
            )
        if col in by_col or row in rows:
            raise InvariantViolation(
                f"negative skips do not form a permutation pattern: {cells}"
            )
        by_col[col] = row
        rows.add(row)
    if len(by_col) != n - 1:
        raise InvariantViolation(
            f"expected {n - 1} negative skips, found {len(by_col)}: {cells}"
        )
    return tuple(by_col[c] for c in range(1, n))


def in_pattern_class(u: Subword, w: tuple[int, ...]) -> bool:
    """Membership of a distinguished subword in the class of pattern ``w``.

    Requires negative skips exactly at the cells ``(w(c), c)`` and takes at
    every inversion cell of ``w`` (cells ``(r, c)`` with ``w(c) > r`` and
    ``w^{-1}(r) > c``).
    """
    n = u.n
    if sorted(w) != list(range(1, n)):
        raise DomainError(f"pattern must be a permutation of 1..{n - 1}, got {w}")
    if not is_distinguished(u):
        raise DomainError("expected a distinguished subword")
    want = {(w[c - 1], c) for c in range(1, n)}
    if set(negative_skip_cells(u)) != want:
        return False
    inv = {r: c for c, r in enumerate(w, start=1)}
    for c in range(1, n):
        for r in range(1, n):
            if w[c - 1] > r and inv[r] > c:
                p = (r - 1) * (n - 1) + c
                if u.indicator[p - 1] == 0:
                    return False
    return True


def classify_distinguished(n: int, jobs: int = 1) -> dict[tuple[int, ...], list[Subword]]:
    """Distinguished identity-product subwords grouped by pattern class.

    Subwords whose negative skips do not match any pattern (or that fail the
    take condition) are collected under the key ``()``.
    """
    groups: dict[tuple[int, ...], list[Subword]] = {}
    for u in enumerate_distinguished(n, jobs=jobs):
        cells = negative_skip_cells(u)
        by_col = {col: row for row, col in cells}
        key: tuple[int, ...] = ()
        if (len(by_col) == n - 1 and len(cells) == n - 1
                and sorted(by_col) == list(range(1, n))
                and sorted(by_col.values()) == list(range(1, n))):
            w = tuple(by_col[c] for c in range(1, n))
            if in_pattern_class(u, w):
                key = w
        groups.setdefault(key, []).append(u)
    return groups


# ---------------------------------------------------------------------------
# From factorizations back to subwords
# ---------------------------------------------------------------------------


def subword_from_factorization(fact: Factorization) -> Subword:
    """The maximal subword whose skip reflections are the given cyclic
    factorization.

    Skip positions come from the m-sequence via
    ``position = m - floor((m - 1) / n)``; the result is validated to be
    maximal with exactly the expected skip reflections.
    """
    if not is_cyclic(fact):
        raise DomainError("expected a cyclic factorization of the long translation")
    n = fact.n
    m_len = n * (n - 1)
    positions = [m - (m - 1) // n for m in m_sequence(fact)]
    if any(not 1 <= p <= m_len for p in positions):
        raise InvariantViolation(f"skip positions out of range: {positions}")
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise InvariantViolation(f"skip positions not increasing: {positions}")
    indicator = [1] * m_len
    for p in positions:
        indicator[p - 1] = 0
    u = Subword(n, tuple(indicator))
    if not is_maximal_distinguished(u):
        raise InvariantViolation(
            "reconstructed subword is not maximal: "
            f"{[str(r) for r in fact.refs]} -> {u.indicator}"
        )
    got = skip_reflections(u).canonical_refs()
    want = fact.canonical_refs()
    if got != want:
        raise InvariantViolation(
            "reconstructed subword has skip reflections "
            f"{[str(r) for r in got]}, expected {[str(r) for r in want]}"
        )
    return u


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def grid_render(u: Subword) -> str:
    """Plain-text grid: taken letters as ``s<j>``, skips as their canonical
    inversion reflections, negative skips marked with ``*``."""
    n = u.n
    table = inversion_table(u)
    cells: list[str] = []
    for p in range(1, u.word_length + 1):
        if u.indicator[p - 1]:
            cells.append(f"s{(p - 1) % n}")
        else:
            ref = table[p - 1].canonical()
            mark = "*" if ref.is_negative() else ""
            cells.append(f"{mark}(({ref.lo},{ref.hi}))")
    width = max(len(c) for c in cells)
    rows = []
    for r in range(n):
        row = cells[r * (n - 1):(r + 1) * (n - 1)]
        rows.append(" | ".join(c.rjust(width) for c in row))
    return "\n".join(rows)
