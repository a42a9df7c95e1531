"""Partitions driven by halving lines instead of rotation.

Three constructions on cocircular or convex point sets: paired double
stars, symmetric zigzag trees on a regular polygon, and the zigzag
family on a wheel where the center needs special treatment.
"""
import random

from planetrees import (ConstructionChoices, classify, h_labeling,
                        k_halving_lines, make_wheel, theorem2_partition,
                        theorem3_partition, theorem4_partition,
                        verify_partition, w_labeling)
from planetrees.presets import figure_pointset
from planetrees.geom_core import PointSet
import math

rng = random.Random(7)
angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(10))
ps = PointSet(tuple((math.cos(a), math.sin(a)) for a in angles), "convex")

print("halving lines of 10 cocircular points:", k_halving_lines(ps, 0))
print("antipodal labeling pairs:", h_labeling(ps).pairs)

fig5 = figure_pointset("fig5")
for t in (0, 1):
    p = theorem2_partition(fig5, t)
    shapes = {classify(tree).s_k or classify(tree).double_star for tree in p.trees}
    print(f"double-star partition t={t}: verify",
          "pass" if verify_partition(p).ok else "fail", "| shapes", shapes)

gon = PointSet(tuple((math.cos(2 * math.pi * k / 12 + 0.3),
                      math.sin(2 * math.pi * k / 12 + 0.3))
                     for k in range(12)), "convex")
p3 = theorem3_partition(gon, 2)
print("\nzigzag partition of the regular 12-gon, r=2: verify",
      "pass" if verify_partition(p3).ok else "fail")
print("first tree:", list(p3.trees[0].edges))
print("symmetry witness edge:", classify(p3.trees[0]).symmetric)

wheel = make_wheel(7)
print("\nwheel center by labeling:", w_labeling(wheel).w)
for typ in ("Type1", "Type2"):
    p4 = theorem4_partition(wheel, 3, ConstructionChoices(type4=typ))
    kinds = [("w-cat" if classify(t).w_caterpillar else
              "cat" if classify(t).caterpillar else "?") for t in p4.trees]
    print(f"wheel zigzag {typ}, r=3: verify",
          "pass" if verify_partition(p4).ok else "fail", "| trees", kinds)
