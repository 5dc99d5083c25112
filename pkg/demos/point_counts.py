"""Compute the same point count three independent ways and watch them agree.

The polynomial (q-1)^(2n-2) [n]_q^(n-2) arises (1) as a closed form, (2) as a
sum of (q-1)^skips q^(takes/2) over all distinguished subwords, and (3) as a
q-weighted sum over Kostant partitions of the long translation's weight.  A
fourth, two-variable computation -- the bracket sum over the same Kostant
partitions divided by ((q-1)(1-t))^(n-1) -- specializes to the same data.
Dividing by (q-1)^(2n-2) and letting q -> 1 leaves exactly the number of
labeled trees, n^(n-2).  Run it with:  python3 demos/point_counts.py
"""

from treefact import (
    cayley_count,
    closed_form,
    deodhar_point_count,
    haglund_hilbert,
    hilbert_specialization,
    kostant_partitions,
    opdam_point_count,
)


def main() -> None:
    for n in (2, 3, 4, 5):
        expected = closed_form(n)
        print(f"n={n}")
        print(f"  closed form (q-1)^{2 * n - 2} [n]_q^{n - 2} = {expected}")

        deodhar = deodhar_point_count(n)
        print(f"  sum over distinguished subwords:    match={deodhar == expected}")

        opdam = opdam_point_count(n)
        n_parts = len(kostant_partitions(n))
        print(f"  sum over {n_parts} Kostant partitions:      "
              f"match={opdam == expected}")

        hilb = haglund_hilbert(n)
        print(f"  two-variable Hilbert series: {hilb}")
        print(f"    at q=t=1: {hilb(1, 1)}   "
              f"symmetric: {hilb.swap_qt() == hilb}")
        print(f"    specialization t=1/q equals [n]_q^(n-2): "
              f"{hilbert_specialization(n)}")

        counts = {m: cayley_count(n, m)
                  for m in ("closed", "opdam", "deodhar", "haglund")}
        assert len(set(counts.values())) == 1
        print(f"  labeled-tree count from every method: {counts['closed']} "
              f"(= {n}^{n - 2})")
        print()


if __name__ == "__main__":
    main()
