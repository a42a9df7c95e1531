"""Walk through one wheel partition, from abstract tree to picture.

Start with the 6-vertex chair (a path with one extra leaf), place it on
the wheel so rotated copies stay edge-disjoint, and let the complement
pick up whatever the rotations miss.
"""
from planetrees import (boundary_edges, build_wheel_partition, classify,
                        radial_edges, verify_partition)
from planetrees.cli_io import render_svg
from planetrees.presets import builtin_tree
from planetrees.wheel_partition import analyze_wheel_partition

chair = builtin_tree("fig2i", 3)
print("abstract tree:", chair)
report = classify(chair)
print("caterpillar:", report.caterpillar, "| w-caterpillar:", report.w_caterpillar)
print("4-path witness:", report.p4_symmetric.path)

partition = build_wheel_partition(chair, 3)
print("\nverify:", "pass" if verify_partition(partition).ok else "fail")
for i, tree in enumerate(partition.trees):
    print(f"T_{i}: {list(tree.edges)}")
    print(f"     boundary {boundary_edges(tree)}  radial {radial_edges(tree)}")

analysis = analyze_wheel_partition(partition)
print("\ncomplement tree index:", analysis.one_boundary_tree)
print("its consecutive radial run:", analysis.radial_run)

svg = render_svg(partition)
with open("wheel3_partition.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("\nwrote wheel3_partition.svg")
