"""Representation type by exact diagram recognition.

The underlying graph of a quiver decides the representation type of its
free category: disjoint unions of Dynkin diagrams are of finite type,
extended Dynkin diagrams are allowed for tame type, anything else is
wild.  The recognizer matches shapes exactly; a few probes below.
"""

from invcat import Quiver, classify

probes = {
    "A4 line": Quiver(
        ["u0", "u1", "u2", "u3"],
        {("u1", "u0"): 1, ("u2", "u1"): 1, ("u3", "u2"): 1},
    ),
    "D4 star": Quiver(
        ["c", "l1", "l2", "l3"],
        {("c", "l1"): 1, ("l2", "c"): 1, ("l3", "c"): 1},
    ),
    "Kronecker double arrow": Quiver(["x", "y"], {("y", "x"): 2}),
    "oriented 5-cycle": Quiver(
        [f"t{i}" for i in range(5)],
        {(f"t{(i + 1) % 5}", f"t{i}"): 1 for i in range(5)},
    ),
    "single loop": Quiver(["v"], {("v", "v"): 1}),
    "double loop": Quiver(["v"], {("v", "v"): 2}),
    "5-armed star": Quiver(
        ["c"] + [f"a{i}" for i in range(5)],
        {(f"a{i}", "c"): 1 for i in range(5)},
    ),
    "two components": Quiver(
        ["a", "b", "c", "d", "e"],
        {("b", "a"): 1, ("d", "c"): 1, ("e", "d"): 1, ("c", "e"): 1},
    ),
}

for name, quiver in probes.items():
    c = classify(quiver)
    labels = ", ".join(str(l) for l in c.components)
    print(f"{name:<24} -> {c.overall:<6} [{labels}]")
