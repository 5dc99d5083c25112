"""Count every structure at small rank and cross-check the censuses.

Labeled trees, plane-embedded marked trees, maximal subwords, and
distinguished subwords are all enumerated exhaustively; the script prints
their counts side by side, the rotation-orbit sizes of the maximal subwords,
and the pattern-class breakdown of the distinguished subwords.
Run it with:  python3 demos/census_and_counts.py
"""

import math

from treefact import (
    all_labeled_trees,
    all_plane_trees,
    classify_distinguished,
    enumerate_distinguished,
    enumerate_maximal,
    is_maximal_distinguished,
    orbit_sizes,
)


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def main() -> None:
    print("censuses (exhaustive enumeration)")
    print(f"  {'n':>2} {'trees':>6} {'plane trees':>12} "
          f"{'maximal':>8} {'distinguished':>14}")
    for n in range(2, 6):
        trees = sum(1 for _ in all_labeled_trees(n))
        planes = sum(1 for _ in all_plane_trees(n))
        maximal = len(enumerate_maximal(n))
        distinguished = len(enumerate_distinguished(n)) if n <= 5 else None
        print(f"  {n:>2} {trees:>6} {planes:>12} {maximal:>8} "
              f"{distinguished:>14}")
        assert trees == maximal == n ** (n - 2)
        assert planes == math.factorial(n - 1) * catalan(n - 1)

    print("\nrotation orbits of the maximal subwords")
    for n in range(2, 6):
        sizes = orbit_sizes(n)
        print(f"  n={n}: {len(sizes)} orbits, sizes {sizes}")

    print("\npattern classes of the 45 distinguished subwords at n=4")
    groups = classify_distinguished(4)
    total = 0
    for pattern in sorted(groups):
        members = groups[pattern]
        n_max = sum(1 for u in members if is_maximal_distinguished(u))
        total += len(members)
        print(f"  pattern {pattern}: {len(members):>2} subwords "
              f"({n_max} maximal)")
    print(f"  total: {total}")
    assert total == 45


if __name__ == "__main__":
    main()
