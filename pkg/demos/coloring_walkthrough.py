"""Walk through colour sets, a clash, and the low-degree fix on one graph.

Run: python3 demos/coloring_walkthrough.py
"""

from avdtotal import (Graph, TotalColoring, avd_violations, color_sets,
                      degree_split, distinguish_low_degree, greedy_total,
                      properness_violations)


def show(g, phi, label):
    sets = color_sets(g, phi)
    print(f"{label}: k={phi.k}")
    for v in range(g.n):
        print(f"  vertex {v} (deg {g.degree(v)}): colour {phi.vertex_colors[v]}, "
              f"set {sorted(sets[v])}")


def main():
    # two low-degree vertices (0 and 3..7) around a high hub (vertex 2)
    g = Graph.build(8, [(0, 1), (0, 2), (1, 7), (2, 3), (2, 4), (2, 5), (2, 6)])
    split = degree_split(g)
    print("low vertices:", sorted(split.low), " high vertices:", sorted(split.high))

    phi = TotalColoring(
        (2, 3, 4, 2, 1, 1, 1, 1),
        {(0, 1): 1, (0, 2): 3, (1, 7): 2, (2, 3): 1, (2, 4): 2,
         (2, 5): 5, (2, 6): 6}, 6)
    assert properness_violations(g, phi) == []
    show(g, phi, "hand-built proper colouring")
    print("clashes:", [v.witness for v in avd_violations(g, phi)])

    fixed = distinguish_low_degree(g, phi)
    show(g, fixed, "after recolouring low-degree vertices")
    print("clashes:", [v.witness for v in avd_violations(g, fixed)])

    print("\ngreedy seed on the same graph needs no fix:")
    seed = greedy_total(g)
    print("  k =", seed.k, " clashes:", len(avd_violations(g, seed)))


if __name__ == "__main__":
    main()
