"""Walk one rank-10 example through the whole chain of structures.

Starting from a labeled tree on 10 vertices, this script builds its canonical
plane embedding, reads off the clockwise walk and the run-leaf labels,
converts the walk into a minimal reflection factorization of the long
translation, inspects the factorization's chain / m-sequence / pair
structure, emits the corresponding maximal subword, and converts everything
back.  Run it with:  python3 demos/running_example.py
"""

from treefact import (
    LabeledTree,
    chain_form,
    clockwise_walk,
    cyclic_embedding,
    factorization_from_tree,
    grid_render,
    is_cyclic,
    m_sequence,
    pair_structure,
    run_leaf_labels,
    skip_reflections,
    subword_from_tree,
    suffix_images,
    tree_from_subword,
)

EDGES = ((1, 3), (1, 4), (1, 5), (1, 8), (2, 10), (5, 7), (5, 10), (6, 8),
         (9, 10))


def main() -> None:
    tree = LabeledTree(10, EDGES)
    print("labeled tree on 10 vertices")
    print("  edges:", " ".join(f"{a}-{b}" for a, b in tree.edges))

    plane = cyclic_embedding(tree)
    print("\ncanonical plane embedding (clockwise neighbor orders)")
    for v in range(1, 11):
        print(f"  at {v}: {plane.rotation(v)}")
    print("  marked edge:", plane.marked)

    walk = clockwise_walk(plane)
    print("\nclockwise walk from the marked edge (each edge twice):")
    print(" ", " -> ".join(map(str, walk.vertices)))

    labels = run_leaf_labels(plane)
    print("\nrun-leaf labels along the walk (per-vertex sums are all 9):")
    print(" ", labels.labels)

    fact = factorization_from_tree(plane)
    print("\nwalk as a minimal factorization of the long translation:")
    print(" ", " ".join(str(r) for r in fact.canonical_refs()))
    print("  endpoint chain:", chain_form(fact))
    print("  m-sequence (strictly increasing <=> cyclic):", m_sequence(fact))
    print("  cyclic:", is_cyclic(fact))
    print("  progression of 0 under the suffix products:")
    print("   ", suffix_images(fact, 0)[:-1])

    pairs = pair_structure(fact)
    print("\neach residue is raised by exactly two factors (its pair):")
    for k in sorted(pairs):
        p = pairs[k]
        print(f"  residue {k}: factors {p.left} and {p.right}, partner {p.b}")

    u = subword_from_tree(plane)
    print("\nmaximal subword of the repeated-cycle word "
          f"({u.take_count()} takes, {len(u.skips())} skips)")
    print("  skip positions:", u.skips())
    print("  grid (taken letters as s<j>, skips as their inversions,")
    print("        negative skips starred):")
    for line in grid_render(u).splitlines():
        print("   ", line)

    assert skip_reflections(u).canonical_refs() == fact.canonical_refs()
    assert tree_from_subword(u) == plane
    print("\nround trip tree -> subword -> tree: exact")


if __name__ == "__main__":
    main()
