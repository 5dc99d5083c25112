"""Named verification suites shared by the command-line tool and the tests.

Each suite returns a list of :class:`CheckResult` records.  Checks are
deterministic: randomized spot checks use a seed derived from ``n`` only.
Structural invariants asserted inside the library (dual-checker agreement,
walk closure, and so on) raise :class:`~treefact.affine.InvariantViolation`
instead of producing a FAIL record — a FAIL means a named mathematical claim
did not hold on the stated domain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial

from .affine import AffinePerm, DomainError, InvariantViolation, Word
from .factorization import (is_cyclic, is_tree_like, m_sequence,
                            nesting_violations, pair_structure,
                            residue_clock_test)
from .qcount import (LaurentPoly, closed_form, deodhar_point_count,
                     haglund_hilbert, hilbert_specialization,
                     opdam_point_count, qint)
from .subwords import (Subword, classify_distinguished,
                       enumerate_distinguished, enumerate_maximal,
                       inversion_table, is_distinguished,
                       is_maximal_distinguished, rotate,
                       skip_pattern_permutation, skip_reflections,
                       subword_from_factorization)
from .trees import (all_labeled_trees, all_plane_trees, cyclic_embedding,
                    factorization_from_tree, subword_from_tree,
                    tree_from_factorization, tree_from_subword)

#: Distinguished-subword census for the ranks where it is known exactly.
KNOWN_DISTINGUISHED_COUNTS = {2: 1, 3: 4, 4: 45, 5: 1331}

#: Rank cap for full distinguished-subword enumeration.
DISTINGUISHED_BOUND = 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "PASS" | "FAIL" | "SKIP"
    detail: str
    counterexample: dict | None = None


def _passed(name: str, detail: str) -> CheckResult:
    return CheckResult(name, "PASS", detail)


def _failed(name: str, detail: str, counterexample: dict | None = None
            ) -> CheckResult:
    return CheckResult(name, "FAIL", detail, counterexample)


def _skipped(name: str, detail: str) -> CheckResult:
    return CheckResult(name, "SKIP", detail)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def cayley(n: int) -> int:
    return n ** (n - 2)


def _require_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"suites need an integer n >= 2, got {n!r}")


# ---------------------------------------------------------------------------
# Random sampling helpers (deterministic via seeds derived from n)
# ---------------------------------------------------------------------------


def random_identity_subword(n: int, rng: random.Random) -> Subword:
    """A uniformly arbitrary identity-product subword via randomized DFS.

    Branch feasibility: the remaining positions must suffice to cancel the
    current prefix length.
    """
    word = Word.lambda_word(n)
    total = len(word)

    def dfs(pos: int, perm: AffinePerm, length: int, bits: list[int]) -> bool:
        if pos > total:
            return length == 0
        j = word.letter(pos)
        remaining = total - pos
        # Taking letter j changes the exact length by +-1 (descent test).
        taken_length = length + (-1 if perm.has_descent(j) else 1)
        options = []
        if length <= remaining:
            options.append((0, perm, length))
        if taken_length <= remaining:
            options.append((1, perm.times_simple(j), taken_length))
        rng.shuffle(options)
        for bit, nxt, nxt_length in options:
            bits.append(bit)
            if dfs(pos + 1, nxt, nxt_length, bits):
                return True
            bits.pop()
        return False

    bits: list[int] = []
    if not dfs(1, AffinePerm.identity(n), 0, bits):
        raise DomainError(f"no identity-product subword found for n={n}")
    return Subword(n, tuple(bits))


def _sample_plane_trees(n: int, rng: random.Random, count: int) -> list:
    """Random plane trees: random tree sequence code, random rotations,
    random marked edge."""
    from .trees import LabeledTree, PlaneTree

    out = []
    for _ in range(count):
        seq = tuple(rng.randrange(1, n + 1) for _ in range(n - 2))
        tree = LabeledTree.from_sequence(seq, n)
        adj = tree.adjacency()
        rotations = {}
        for v in range(1, n + 1):
            nbrs = list(adj[v])
            rest = nbrs[1:]
            rng.shuffle(rest)
            rotations[v] = tuple([nbrs[0]] + rest)
        marked = (n, rng.choice(adj[n]))
        out.append(PlaneTree.from_rotations(n, rotations, marked))
    return out


# ---------------------------------------------------------------------------
# Suite: bijections
# ---------------------------------------------------------------------------


def suite_bijections(n: int, jobs: int = 1) -> list[CheckResult]:
    """Round trips between trees, factorizations, and maximal subwords."""
    _require_rank(n)
    results = []

    embeddings = [cyclic_embedding(t) for t in all_labeled_trees(n)]
    bad = []
    for pt in embeddings:
        u = subword_from_tree(pt)
        if tree_from_subword(u) != pt:
            bad.append(pt)
    if bad:
        results.append(_failed(
            "tree-subword-tree identity",
            f"{len(bad)} of {len(embeddings)} trees fail the round trip",
            bad[0].to_dict(),
        ))
    else:
        results.append(_passed(
            "tree-subword-tree identity",
            f"all {len(embeddings)} labeled trees round-trip",
        ))

    maximal = enumerate_maximal(n, jobs=jobs)
    bad = []
    for u in maximal:
        if subword_from_tree(tree_from_subword(u)) != u:
            bad.append(u)
    if bad:
        results.append(_failed(
            "subword-tree-subword identity",
            f"{len(bad)} of {len(maximal)} maximal subwords fail",
            bad[0].to_dict(),
        ))
    else:
        results.append(_passed(
            "subword-tree-subword identity",
            f"all {len(maximal)} maximal subwords round-trip",
        ))

    want = cayley(n)
    if len(maximal) == len(embeddings) == want:
        results.append(_passed(
            "maximal census equals tree census",
            f"{len(maximal)} subwords = {len(embeddings)} trees = n^(n-2)",
        ))
    else:
        results.append(_failed(
            "maximal census equals tree census",
            f"subwords={len(maximal)}, trees={len(embeddings)}, "
            f"expected {want}",
        ))

    bad = []
    for pt in embeddings:
        fact = factorization_from_tree(pt)
        if not is_cyclic(fact) or tree_from_factorization(fact) != pt:
            bad.append(pt)
    if bad:
        results.append(_failed(
            "tree-factorization-tree identity",
            f"{len(bad)} embeddings fail (walk factorization not cyclic "
            f"or does not invert)",
            bad[0].to_dict(),
        ))
    else:
        results.append(_passed(
            "tree-factorization-tree identity",
            f"all {len(embeddings)} walk factorizations are cyclic and "
            f"invert",
        ))

    bad = []
    for pt in embeddings:
        fact = factorization_from_tree(pt)
        u = subword_from_tree(pt)
        if subword_from_factorization(fact) != u:
            bad.append(pt)
        if skip_reflections(u).canonical_refs() != fact.canonical_refs():
            bad.append(pt)
    if bad:
        results.append(_failed(
            "skip reflections match the walk",
            f"{len(bad)} embeddings disagree",
            bad[0].to_dict(),
        ))
    else:
        results.append(_passed(
            "skip reflections match the walk",
            f"subword and factorization routes agree on all "
            f"{len(embeddings)} trees",
        ))

    plane = list(all_plane_trees(n))
    bad = []
    for pt in plane:
        fact = factorization_from_tree(pt)
        if not is_tree_like(fact) or tree_from_factorization(fact) != pt:
            bad.append(pt)
    if bad:
        results.append(_failed(
            "plane-tree-factorization identity",
            f"{len(bad)} of {len(plane)} plane trees fail",
            bad[0].to_dict(),
        ))
    else:
        results.append(_passed(
            "plane-tree-factorization identity",
            f"all {len(plane)} plane trees give tree-like factorizations "
            f"that invert",
        ))

    cyclic_count = sum(
        1 for pt in plane if is_cyclic(factorization_from_tree(pt)))
    if cyclic_count == want:
        results.append(_passed(
            "cyclic factorizations among plane trees",
            f"{cyclic_count} of {len(plane)} are cyclic = n^(n-2)",
        ))
    else:
        results.append(_failed(
            "cyclic factorizations among plane trees",
            f"{cyclic_count} cyclic, expected {want}",
        ))

    return results


# ---------------------------------------------------------------------------
# Suite: lemmas
# ---------------------------------------------------------------------------


def _identity_subwords_exhaustive(n: int) -> list[Subword]:
    """All identity-product subwords by plain backtracking (small n only)."""
    word = Word.lambda_word(n)
    total = len(word)
    out: list[Subword] = []

    def dfs(pos: int, perm: AffinePerm, bits: list[int]) -> None:
        if pos > total:
            if perm.is_identity():
                out.append(Subword(n, tuple(bits)))
            return
        j = word.letter(pos)
        remaining = total - pos
        if perm.length() <= remaining:
            bits.append(0)
            dfs(pos + 1, perm, bits)
            bits.pop()
        taken = perm.times_simple(j)
        if taken.length() <= remaining:
            bits.append(1)
            dfs(pos + 1, taken, bits)
            bits.pop()

    dfs(1, AffinePerm.identity(n), [])
    return out


def _max_segment_displacement(u: Subword) -> int:
    """Largest ``|segment(k) - k|`` over all cyclic segments of an
    identity-product subword.

    For identity products, the cyclic segment through positions ``a..b``
    equals ``prefix(a-1)^-1 * prefix(b)``, including wrap-around segments.
    """
    n = u.n
    prefixes = u.prefix_products()
    if not prefixes[-1].is_identity():
        raise DomainError("segment displacement shortcut needs an "
                          "identity-product subword")
    inverses = [p.inverse() for p in prefixes]
    worst = 0
    total = u.word_length
    for a in range(1, total + 1):
        inv = inverses[a - 1]
        for b in range(1, total + 1):
            seg = inv * prefixes[b]
            for k in range(1, n + 1):
                worst = max(worst, abs(seg.apply(k) - k))
    return worst


def suite_lemmas(n: int, jobs: int = 1) -> list[CheckResult]:
    """Structural lemmas: displacement and inversion bounds, conjugated skip
    positions, pair/nesting structure, rotation closure, and the cyclic-order
    arithmetic helper.  Exhaustive for n <= 4, randomized spot checks above.
    """
    _require_rank(n)
    results = []
    rng = random.Random(0x5EED ^ n)
    exhaustive = n <= 4

    if exhaustive:
        id_subwords = _identity_subwords_exhaustive(n)
        domain = f"all {len(id_subwords)} identity-product subwords"
    else:
        id_subwords = [random_identity_subword(n, rng) for _ in range(40)]
        domain = f"{len(id_subwords)} random identity-product subwords"

    worst = 0
    bad = None
    for u in id_subwords:
        d = _max_segment_displacement(u)
        if d > worst:
            worst, bad = d, u
    if worst <= n - 2:
        results.append(_passed(
            "segment displacement bound",
            f"max displacement {worst} <= n-2 over {domain}",
        ))
    else:
        results.append(_failed(
            "segment displacement bound",
            f"displacement {worst} > {n - 2}",
            bad.to_dict(),
        ))

    bad = None
    for u in id_subwords:
        for r in inversion_table(u):
            if r.hi - r.lo > n - 1:
                bad = (u, r)
                break
        if bad:
            break
    if bad is None:
        results.append(_passed(
            "inversion entry bound",
            f"all inversion entries move by <= n-1 over {domain}",
        ))
    else:
        results.append(_failed(
            "inversion entry bound",
            f"entry {bad[1]} moves by {bad[1].hi - bad[1].lo} > {n - 1}",
            bad[0].to_dict(),
        ))

    maximal = enumerate_maximal(n, jobs=jobs)
    bad = None
    for u in maximal:
        skips = u.skips()
        want = tuple(i + (i - 1) // (n - 1) for i in skips)
        if m_sequence(skip_reflections(u)) != want:
            bad = u
            break
    if bad is None:
        results.append(_passed(
            "conjugated skip positions",
            f"m = i + floor((i-1)/(n-1)) on all {len(maximal)} maximal "
            f"subwords",
        ))
    else:
        results.append(_failed(
            "conjugated skip positions",
            "m-sequence disagrees with the skip-position formula",
            bad.to_dict(),
        ))

    if exhaustive:
        plane = list(all_plane_trees(n))
        tree_domain = f"all {len(plane)} plane trees"
    else:
        plane = _sample_plane_trees(n, rng, 40)
        tree_domain = f"{len(plane)} random plane trees"
    bad = None
    for pt in plane:
        fact = factorization_from_tree(pt)
        pair_structure(fact)
        violations = nesting_violations(fact)
        if violations:
            bad = (pt, violations)
            break
    if bad is None:
        results.append(_passed(
            "pair and nesting structure",
            f"pairs partition the factors with no nesting violations over "
            f"{tree_domain}",
        ))
    else:
        results.append(_failed(
            "pair and nesting structure",
            "; ".join(bad[1]),
            bad[0].to_dict(),
        ))

    maximal_set = set(maximal)
    bad = None
    for u in maximal:
        v = rotate(u)
        if not is_maximal_distinguished(v) or v not in maximal_set:
            bad = u
            break
    if bad is None:
        results.append(_passed(
            "rotation closure",
            f"rotation maps the {len(maximal)} maximal subwords to "
            f"themselves",
        ))
    else:
        results.append(_failed(
            "rotation closure",
            "rotation leaves the maximal set",
            bad.to_dict(),
        ))

    bad = None
    for v in range(1, n + 1):
        for a in range(v - n + 1, v):
            for b in range(v + 1, v + n):
                if a % n == b % n or a % n == v % n or b % n == v % n:
                    continue
                if residue_clock_test(a, v, b, n) != (a + n < b):
                    bad = (a, v, b)
                    break
    if bad is None:
        results.append(_passed(
            "cyclic-order arithmetic helper",
            "residue test matches the integer comparison on all valid "
            "triples",
        ))
    else:
        results.append(_failed(
            "cyclic-order arithmetic helper",
            f"disagreement at (a, v, b) = {bad}",
        ))

    bad = None
    for u in id_subwords:
        if is_distinguished(u):
            fact = skip_reflections(u) if u.skips() else None
            if fact is not None and is_maximal_distinguished(u):
                if not is_tree_like(fact) or not is_cyclic(fact):
                    bad = u
                    break
    if bad is None:
        results.append(_passed(
            "maximal skip reflections are cyclic",
            f"holds over the maximal subwords among {domain}",
        ))
    else:
        results.append(_failed(
            "maximal skip reflections are cyclic",
            "a maximal subword's skip reflections are not cyclic",
            bad.to_dict(),
        ))

    return results


# ---------------------------------------------------------------------------
# Suite: counts
# ---------------------------------------------------------------------------


def suite_counts(n: int, jobs: int = 1) -> list[CheckResult]:
    """Census checks: labeled trees, maximal subwords, plane trees, and the
    distinguished total."""
    _require_rank(n)
    results = []
    want = cayley(n)

    tree_count = sum(1 for _ in all_labeled_trees(n))
    results.append(
        _passed("labeled tree census", f"{tree_count} = n^(n-2)")
        if tree_count == want else
        _failed("labeled tree census", f"{tree_count}, expected {want}"))

    maximal_count = len(enumerate_maximal(n, jobs=jobs))
    results.append(
        _passed("maximal subword census", f"{maximal_count} = n^(n-2)")
        if maximal_count == want else
        _failed("maximal subword census",
                f"{maximal_count}, expected {want}"))

    plane_count = sum(1 for _ in all_plane_trees(n))
    plane_want = factorial(n - 1) * catalan(n - 1)
    results.append(
        _passed("plane tree census",
                f"{plane_count} = (n-1)! * catalan(n-1)")
        if plane_count == plane_want else
        _failed("plane tree census",
                f"{plane_count}, expected {plane_want}"))

    if n <= DISTINGUISHED_BOUND:
        dist_count = len(enumerate_distinguished(n, jobs=jobs))
        dist_want = KNOWN_DISTINGUISHED_COUNTS[n]
        results.append(
            _passed("distinguished subword census",
                    f"{dist_count} matches the known total")
            if dist_count == dist_want else
            _failed("distinguished subword census",
                    f"{dist_count}, expected {dist_want}"))
    else:
        results.append(_skipped(
            "distinguished subword census",
            f"full distinguished enumeration is only run for "
            f"n <= {DISTINGUISHED_BOUND}",
        ))

    return results


# ---------------------------------------------------------------------------
# Suite: polynomials
# ---------------------------------------------------------------------------


def suite_polynomials(n: int, jobs: int = 1) -> list[CheckResult]:
    """Agreement of the three point counts and the Hilbert-series facts."""
    _require_rank(n)
    results = []
    closed = closed_form(n)

    opdam = opdam_point_count(n)
    results.append(
        _passed("trace formula equals closed form", f"both equal {closed}")
        if opdam == closed else
        _failed("trace formula equals closed form",
                f"trace formula gives {opdam}, closed form {closed}"))

    if n <= DISTINGUISHED_BOUND:
        deodhar = deodhar_point_count(n, jobs=jobs)
        results.append(
            _passed("subword sum equals closed form", f"both equal {closed}")
            if deodhar == closed else
            _failed("subword sum equals closed form",
                    f"subword sum gives {deodhar}, closed form {closed}"))
    else:
        results.append(_skipped(
            "subword sum equals closed form",
            f"needs the full distinguished enumeration "
            f"(n <= {DISTINGUISHED_BOUND})",
        ))

    hilb = haglund_hilbert(n)
    value = hilb(1, 1)
    results.append(
        _passed("Hilbert series at q=t=1", f"{value} = n^(n-2)")
        if value == cayley(n) else
        _failed("Hilbert series at q=t=1",
                f"{value}, expected {cayley(n)}"))

    negative = {key: c for key, c in hilb.coeffs.items() if c < 0}
    results.append(
        _passed("Hilbert coefficients nonnegative",
                f"{len(hilb.coeffs)} terms, all positive")
        if not negative else
        _failed("Hilbert coefficients nonnegative",
                f"negative terms: {sorted(negative.items())[:5]}"))

    results.append(
        _passed("Hilbert series q-t symmetric", "swap(q, t) fixes the series")
        if hilb == hilb.swap_qt() else
        _failed("Hilbert series q-t symmetric", "swap(q, t) changes the series"))

    spec = hilbert_specialization(n)
    spec_want = qint(n) ** (n - 2)
    results.append(
        _passed("Hilbert specialization",
                "q^((n-1)(n-2)/2) * Hilb(q, 1/q) = [n]_q^(n-2)")
        if spec == spec_want else
        _failed("Hilbert specialization",
                f"specialization gives {spec}, expected {spec_want}"))

    limit = LaurentPoly({1: 1, 0: -1}) ** (2 * n - 2)
    quotient = closed.divexact(limit)
    results.append(
        _passed("tree-count limit",
                f"[point count / (q-1)^(2n-2)] at q=1 equals {cayley(n)}")
        if quotient(1) == cayley(n) else
        _failed("tree-count limit", f"{quotient(1)}, expected {cayley(n)}"))

    return results


# ---------------------------------------------------------------------------
# Suite: conjecture
# ---------------------------------------------------------------------------


def suite_conjecture(n: int, jobs: int = 1) -> list[CheckResult]:
    """Negative-skip pattern facts: the permutation-matrix property of
    maximal subwords and the pattern-class partition of the distinguished
    subwords."""
    _require_rank(n)
    results = []

    maximal = enumerate_maximal(n, jobs=jobs)
    bad = None
    for u in maximal:
        try:
            skip_pattern_permutation(u)
        except (DomainError, InvariantViolation) as exc:
            bad = (u, str(exc))
            break
    if bad is None:
        results.append(_passed(
            "negative skips form a permutation pattern",
            f"one negative skip per used row/column on all {len(maximal)} "
            f"maximal subwords",
        ))
    else:
        results.append(_failed(
            "negative skips form a permutation pattern",
            bad[1],
            bad[0].to_dict(),
        ))

    if n <= DISTINGUISHED_BOUND:
        classes = classify_distinguished(n, jobs=jobs)
        unmatched = classes.get((), [])
        total = sum(len(v) for v in classes.values())
        dist_total = len(enumerate_distinguished(n, jobs=jobs))
        sizes = {"".join(map(str, w)): len(v)
                 for w, v in classes.items() if w}
        if not unmatched and total == dist_total:
            results.append(_passed(
                "pattern classes partition the distinguished subwords",
                f"{len(sizes)} classes cover all {total}: {sizes}",
            ))
        else:
            results.append(_failed(
                "pattern classes partition the distinguished subwords",
                f"{len(unmatched)} unmatched of {dist_total}",
                unmatched[0].to_dict() if unmatched else None,
            ))
    else:
        results.append(_skipped(
            "pattern classes partition the distinguished subwords",
            f"needs the full distinguished enumeration "
            f"(n <= {DISTINGUISHED_BOUND})",
        ))

    if n == 4:
        classes = classify_distinguished(4, jobs=jobs)
        sub = classes.get((1, 3, 2), [])
        max_count = sum(1 for u in sub if is_maximal_distinguished(u))
        if (max_count, len(sub)) == (3, 8):
            results.append(_passed(
                "pattern class of 132",
                "3 maximal and 8 distinguished subwords, as known",
            ))
        else:
            results.append(_failed(
                "pattern class of 132",
                f"got ({max_count}, {len(sub)}), expected (3, 8)",
            ))

    return results


SUITES = {
    "bijections": suite_bijections,
    "lemmas": suite_lemmas,
    "counts": suite_counts,
    "polynomials": suite_polynomials,
    "conjecture": suite_conjecture,
}


def run_suite(name: str, n: int, jobs: int = 1) -> list[CheckResult]:
    """Run one named suite, or all of them for ``name == "all"``."""
    if name == "all":
        results = []
        for suite_name in SUITES:
            for res in SUITES[suite_name](n, jobs=jobs):
                results.append(CheckResult(
                    f"{suite_name}: {res.name}", res.status, res.detail,
                    res.counterexample))
        return results
    if name not in SUITES:
        raise DomainError(
            f"unknown suite {name!r}; expected one of "
            f"{', '.join(sorted(SUITES))}, or all"
        )
    return [CheckResult(f"{name}: {res.name}", res.status, res.detail,
                        res.counterexample)
            for res in SUITES[name](n, jobs=jobs)]
