"""Frozen oracle data shared by the test suite.

Every constant below was derived by hand, independently of the library code,
so the tests can act as oracles for the implementation.  The core worked
example is a rank-10 instance (a labeled tree on 10 vertices together with
its walk, factorization, chain, run-leaf labels, and subword); smaller
rank-2/3/4 instances pin down edge cases and full enumerations.
"""

from __future__ import annotations

import random

import pytest

# ---------------------------------------------------------------------------
# Rank-10 worked example: tree <-> factorization <-> subword
# ---------------------------------------------------------------------------

N10 = 10

# The 18 reflections of the worked rank-10 factorization of the long
# translation, written as (lo, hi) integer representatives.
EX10_REFS = (
    (0, 2), (2, 10), (0, 5), (5, 7), (-3, 5), (-5, 1), (1, 3), (-7, 1),
    (1, 4), (-6, 1), (1, 8), (-2, 6), (6, 8), (-2, 1), (1, 5), (5, 10),
    (0, 9), (9, 10),
)

# The increasing chain of endpoint representatives for the same factorization.
EX10_CHAIN = (0, 2, 10, 15, 17, 25, 31, 33, 41, 44, 51, 58, 66, 68, 71, 75,
              80, 89, 90)

# Images of 0 under the suffix products r_l ... r_18 for l = 1..18.
EX10_PROGRESSION = (
    -90, -88, -80, -75, -73, -65, -59, -57, -49,
    -46, -39, -32, -24, -22, -19, -15, -10, -1,
)

# The m-sequence (conjugate reflection images of 0) of the factorization.
EX10_MSEQ = (2, 12, 15, 17, 27, 31, 33, 43, 44, 54, 58, 66, 76, 78, 81, 85,
             89, 99)

# The underlying labeled tree and its vertex-anchored plane structure.
EX10_EDGES = (
    (1, 3), (1, 4), (1, 5), (1, 8), (2, 10), (5, 7), (5, 10), (6, 8), (9, 10),
)
EX10_MARKED = (10, 2)
# Cyclic neighbor orders (anchor-normalized: smallest neighbor first).
EX10_ROTATIONS = {
    1: (3, 4, 8, 5),
    2: (10,),
    3: (1,),
    4: (1,),
    5: (1, 10, 7),
    6: (8,),
    7: (5,),
    8: (1, 6),
    9: (10,),
    10: (2, 5, 9),
}

# Closed clockwise walk around the plane tree (2n-1 vertices).
EX10_WALK = (10, 2, 10, 5, 7, 5, 1, 3, 1, 4, 1, 8, 6, 8, 1, 5, 10, 9, 10)

# Run-leaf labels read along the walk (2n-1 of them).
EX10_LABELS = (2, 9, 3, 2, 9, 3, 2, 9, 1, 9, 4, 7, 9, 2, 2, 4, 4, 9, 0)

# 1-based positions of the skipped letters in the associated subword.
EX10_SKIPS = (2, 11, 14, 16, 25, 28, 30, 39, 40, 49, 53, 60, 69, 71, 73,
               77, 81, 90)


def _indicator_from_skips(n: int, skips) -> tuple[int, ...]:
    m = n * (n - 1)
    skipset = set(skips)
    return tuple(0 if p in skipset else 1 for p in range(1, m + 1))


EX10_INDICATOR = _indicator_from_skips(N10, EX10_SKIPS)

# Full inversion table of the rank-10 subword, row-major over the 10 x 9
# grid, one canonical (lo, hi) pair per position.
INV10_TABLE = (
    # row 1
    (0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9),
    # row 2
    (-8, 1), (2, 10), (0, 3), (0, 4), (0, 5), (5, 6), (5, 7), (7, 8), (7, 9),
    # row 3
    (-3, 1), (2, 7), (-3, 3), (-3, 4), (7, 10), (-3, 6), (-3, 5), (5, 8), (5, 9),
    # row 4
    (-5, 1), (-8, 1), (1, 3), (3, 4), (0, 3), (3, 6), (-3, 3), (3, 8), (3, 9),
    # row 5
    (3, 5), (2, 3), (-7, 1), (1, 4), (0, 4), (4, 6), (-3, 4), (4, 8), (4, 9),
    # row 6
    (4, 5), (2, 4), (3, 4), (-6, 1), (0, 1), (1, 6), (-3, 1), (1, 8), (8, 9),
    # row 7
    (5, 8), (2, 8), (3, 8), (4, 8), (8, 10), (-2, 6), (-3, 6), (1, 6), (6, 9),
    # row 8
    (5, 6), (2, 6), (3, 6), (4, 6), (6, 10), (6, 8), (7, 8), (-2, 1), (1, 9),
    # row 9
    (1, 5), (2, 5), (3, 5), (4, 5), (5, 10), (6, 10), (7, 10), (8, 10), (0, 9),
    # row 10
    (1, 9), (2, 9), (3, 9), (4, 9), (5, 9), (6, 9), (7, 9), (8, 9), (9, 10),
)

# The left/right index pair (1-based) of reflections increasing k = 1, and
# the partner residue, for the rank-10 factorization.
EX10_PAIR_K1 = (6, 15)
EX10_PARTNER_K1 = 5

# Neighbor sequences to pin the rotation extraction.
EX10_NB_10 = (2, 5, 9)
EX10_NB_1 = (3, 4, 8, 5)

# ---------------------------------------------------------------------------
# Rank-2 minimal case
# ---------------------------------------------------------------------------

N2_REFS = ((0, 1), (1, 2))
N2_CHAIN = (0, 1, 2)
N2_MSEQ = (1, 3)
N2_INDICATOR = (0, 0)

# ---------------------------------------------------------------------------
# Rank-3 star example (tree = star centered at 3, i.e. edges 1-3 and 2-3)
# ---------------------------------------------------------------------------

STAR3_EDGES = ((1, 3), (2, 3))
STAR3_MARKED = (3, 1)
STAR3_WALK = (3, 1, 3, 2, 3)
STAR3_REFS = ((0, 1), (1, 3), (0, 2), (2, 3))
STAR3_CHAIN = (0, 1, 3, 5, 6)
STAR3_LABELS = (1, 2, 1, 2, 0)
STAR3_MSEQ = (1, 4, 5, 8)
STAR3_INDICATOR = (0, 1, 0, 0, 1, 0)
STAR3_SKIP_REFS = ((0, 1), (1, 3), (3, 5), (5, 6))

# Rank-3 path example: tree = path 1-2-3, written with explicit chain reps.
PATH3_REFS = ((0, 2), (2, 4), (4, 5), (5, 6))
PATH3_EDGES = ((1, 2), (2, 3))
PATH3_MARKED = (3, 2)

# ---------------------------------------------------------------------------
# Rank 4: the complete catalog of 16 cyclic factorizations, trees, and
# maximal subwords (one triple per labeled tree on 4 vertices).
# ---------------------------------------------------------------------------

N4 = 4

# The 16 cyclic factorizations of the rank-4 long translation, (lo, hi) reps.
FACTS4 = (
    ((0, 1), (1, 3), (-1, 2), (2, 3), (-1, 1), (1, 4)),
    ((0, 3), (-1, 2), (-2, 1), (1, 2), (2, 3), (3, 4)),
    ((0, 2), (2, 3), (-1, 1), (1, 3), (-1, 2), (2, 4)),
    ((0, 3), (-1, 1), (1, 2), (-2, 1), (1, 3), (3, 4)),
    ((0, 2), (-2, 1), (1, 3), (-1, 1), (1, 2), (2, 4)),
    ((0, 1), (1, 2), (2, 3), (-1, 2), (-2, 1), (1, 4)),
    ((0, 1), (1, 4), (0, 2), (2, 3), (-1, 2), (2, 4)),
    ((0, 2), (2, 4), (0, 3), (-1, 1), (1, 3), (3, 4)),
    ((0, 1), (1, 4), (0, 3), (-1, 2), (2, 3), (3, 4)),
    ((0, 1), (1, 2), (-2, 1), (1, 4), (0, 3), (3, 4)),
    ((0, 1), (1, 3), (-1, 1), (1, 4), (0, 2), (2, 4)),
    ((0, 2), (-2, 1), (1, 2), (2, 4), (0, 3), (3, 4)),
    ((0, 1), (1, 2), (-2, 1), (1, 3), (-1, 1), (1, 4)),
    ((0, 2), (2, 3), (-1, 2), (-2, 1), (1, 2), (2, 4)),
    ((0, 3), (-1, 1), (1, 3), (-1, 2), (2, 3), (3, 4)),
    ((0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)),
)

# The 16 maximal subword indicators, index-matched with FACTS4 (the k-th
# subword's skip reflections are exactly FACTS4[k]).
MAX4_INDICATORS = (
    (0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1),
    (1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0),
    (1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1),
    (1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0),
    (1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1),
    (0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1),
    (0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1),
    (1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0),
    (0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0),
    (0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1),
    (1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0),
    (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1),
    (1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1),
    (1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0),
    (0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0),
)

# First tree of the rank-4 catalog: path 4-1-3-2, marked edge {4, 1}.
TREE4_FIRST_EDGES = ((1, 3), (1, 4), (2, 3))
TREE4_FIRST_MARKED = (4, 1)

# ---------------------------------------------------------------------------
# Expected global counts
# ---------------------------------------------------------------------------

# Number of maximal subwords (= labeled trees = Cayley count n^(n-2)).
CAYLEY = {2: 1, 3: 3, 4: 16, 5: 125, 6: 1296}

# Number of distinguished identity-product subwords.
DISTINGUISHED_TOTALS = {2: 1, 3: 4, 4: 45, 5: 1331}

# Plane-tree census: (n-1)! * Catalan(n-1).
PLANE_TREE_COUNTS = {2: 1, 3: 4, 4: 30}

# Kostant partition counts of the long-translation weight (hand-checked
# through rank 4).
KOSTANT_COUNTS = {2: 1, 3: 2, 4: 7}

# Pattern-class sizes at rank 4 for the pattern w = [1, 3, 2]:
# (maximal members, all distinguished members).
PATTERN4_132 = (3, 8)

# ---------------------------------------------------------------------------
# Helpers shared by tests
# ---------------------------------------------------------------------------


def catalan(k: int) -> int:
    from math import comb

    return comb(2 * k, k) // (k + 1)


def brute_identity_subwords(n: int):
    """All identity-product subwords of the repeated-cycle word, by brute force.

    Enumerates every indicator vector whose taken letters multiply to the
    identity, with only a trivially sound prune (remaining letters must be
    able to cancel the current length).  Usable through rank 4.
    """
    from treefact.affine import AffinePerm
    from treefact.subwords import Subword

    m = n * (n - 1)
    out = []

    def rec(pos: int, perm: AffinePerm, bits: list[int]) -> None:
        remaining = m - pos
        if perm.length() > remaining:
            return
        if pos == m:
            out.append(Subword(n, tuple(bits)))
            return
        j = pos % n
        bits.append(0)
        rec(pos + 1, perm, bits)
        bits.pop()
        bits.append(1)
        rec(pos + 1, perm.times_simple(j), bits)
        bits.pop()

    rec(0, AffinePerm.identity(n), [])
    return out


def random_identity_subword(n: int, rng: random.Random):
    """One uniformly-ish random identity-product subword via restarting DFS."""
    from treefact.affine import AffinePerm
    from treefact.subwords import Subword

    m = n * (n - 1)
    while True:
        perm = AffinePerm.identity(n)
        bits: list[int] = []
        ok = True
        for pos in range(m):
            j = pos % n
            choices = [0, 1]
            rng.shuffle(choices)
            placed = False
            for c in choices:
                nxt = perm.times_simple(j) if c else perm
                if nxt.length() <= m - pos - 1:
                    perm = nxt
                    bits.append(c)
                    placed = True
                    break
            if not placed:
                ok = False
                break
        if ok and perm.is_identity():
            return Subword(n, tuple(bits))


def hurwitz_neighbor(fact, i: int):
    """One braid move at slot i: (r_i, r_{i+1}) -> (r_i r_{i+1} r_i, r_i)."""
    from treefact.affine import Reflection
    from treefact.factorization import Factorization

    refs = list(fact.refs)
    a, b = refs[i], refs[i + 1]
    conj = a.as_perm() * b.as_perm() * a.as_perm()
    refs[i] = Reflection.from_perm(conj)
    refs[i + 1] = a
    return Factorization(fact.n, tuple(refs))


def random_minimal_factorization(n: int, rng: random.Random, moves: int = 40):
    """Random minimal factorization of the long translation via braid moves."""
    from treefact.factorization import Factorization
    from treefact.trees import (all_labeled_trees, cyclic_embedding,
                                factorization_from_tree)

    trees = list(all_labeled_trees(n))
    tree = trees[rng.randrange(len(trees))]
    fact = factorization_from_tree(cyclic_embedding(tree))
    for _ in range(moves):
        i = rng.randrange(len(fact.refs) - 1)
        fact = hurwitz_neighbor(fact, i)
    return fact


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)

# ---------------------------------------------------------------------------
# Session-scoped caches (expensive enumerations shared across test modules)
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def maximal_by_n():
    from treefact.subwords import enumerate_maximal

    cache: dict[int, tuple] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = enumerate_maximal(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def distinguished_by_n():
    from treefact.subwords import enumerate_distinguished

    cache: dict[int, tuple] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = enumerate_distinguished(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def embeddings_by_n():
    from treefact.trees import all_labeled_trees, cyclic_embedding

    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = [cyclic_embedding(t) for t in all_labeled_trees(n)]
        return cache[n]

    return get


@pytest.fixture(scope="session")
def plane_trees_by_n():
    from treefact.trees import all_plane_trees

    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = list(all_plane_trees(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def example_tree():
    """The rank-10 running-example plane tree."""
    from treefact.trees import PlaneTree

    return PlaneTree.from_rotations(N10, dict(EX10_ROTATIONS), EX10_MARKED)


@pytest.fixture(scope="session")
def example_subword():
    from treefact.subwords import Subword

    return Subword(N10, EX10_INDICATOR)


@pytest.fixture(scope="session")
def example_factorization():
    from treefact.affine import Reflection
    from treefact.factorization import Factorization

    return Factorization(
        N10, tuple(Reflection(N10, lo, hi) for lo, hi in EX10_REFS))


@pytest.fixture(scope="session")
def star3_tree():
    from treefact.trees import PlaneTree

    return PlaneTree.from_rotations(
        3, {1: (3,), 2: (3,), 3: (1, 2)}, STAR3_MARKED)
