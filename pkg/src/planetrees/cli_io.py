"""File formats, SVG rendering, and the command-line front end.

Formats:
  pointset   header ``pointset <count> <config_tag>`` then one ``x y``
             line per point; ``#`` starts a comment.
  partition  header ``partition <points> <trees>`` then ``tree <i>``
             blocks (0-based) of ``a b`` edge lines.
  edgelist   bare ``a b`` lines.

Exit codes: 0 success, 1 a check or construction failed mathematically,
2 malformed invocation or input. Every subcommand takes --json.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import presets
from .errors import (DegenerateInput, HypothesisViolated, InvalidChoices,
                     InvalidParameter, InvariantViolation, NoHLabeling,
                     NotAHalvingLine, NotAPartition, NotATree, NotWCaterpillar,
                     NotWheelConfig, NoWLabeling, OddPointCount, ParseError,
                     PlaneTreesError, SideViolation, SizeMismatch,
                     StructureViolation, TooLarge)
from .geom_core import PointSet, collinear_triple, make_wheel
from .halving import h_labeling, k_halving_lines, w_labeling
from .halving_partition import (ConstructionChoices, theorem2_partition,
                                theorem3_partition, theorem4_partition)
from .tree_taxonomy import GeomTree, classify
from .verify_oracle import brute_force_partitions, verify_partition
from .wheel_partition import (Partition, analyze_wheel_partition,
                              build_wheel_partition)

_WHEEL_ARG = re.compile(r"^wheel([0-9]+)$")
_GON_ARG = re.compile(r"^gon([0-9]+)$")
_RANDOM_ARG = re.compile(r"^random([0-9]+)$")

# config failures the math can legitimately report on good input
_CHECK_FAILURES = (NoHLabeling, NoWLabeling, HypothesisViolated,
                   StructureViolation, NotAHalvingLine, SideViolation)
# everything else is a malformed invocation
_USAGE_FAILURES = (ParseError, InvariantViolation, InvalidParameter,
                   InvalidChoices, SizeMismatch, NotWCaterpillar, TooLarge,
                   OddPointCount, DegenerateInput, NotATree, NotWheelConfig,
                   NotAPartition)


# ---------------------------------------------------------------------------
# pointset format

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_pointset(text: str) -> PointSet:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty pointset file", line=1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "pointset":
        raise ParseError(f"bad header {header!r}, want 'pointset <count> <tag>'", line=lineno)
    try:
        count = int(parts[1])
    except ValueError:
        raise ParseError(f"bad point count {parts[1]!r}", line=lineno) from None
    tag = parts[2]
    rows = lines[1:]
    if len(rows) != count:
        raise ParseError(f"header promises {count} points, file has {len(rows)}",
                         line=lineno)
    pts = []
    for lineno, line in rows:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"want 'x y', got {line!r}", line=lineno)
        try:
            pts.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise ParseError(f"bad coordinate in {line!r}", line=lineno) from None
    if len(set(pts)) != len(pts):
        dup = next(p for i, p in enumerate(pts) if p in pts[:i])
        raise InvariantViolation(f"duplicate point {dup}")
    labels = None
    wheel = _WHEEL_ARG.match(tag)
    if wheel:
        n = int(wheel.group(1))
        if count != 2 * n:
            raise InvariantViolation(f"tag wheel{n} needs {2 * n} points, file has {count}")
        labels = tuple(f"v{i}" for i in range(2 * n - 1)) + ("x",)
    elif tag in ("general", "convex"):
        triple = collinear_triple(pts)
        if triple is not None:
            raise InvariantViolation(f"collinear triple {triple} under tag {tag!r}")
    else:
        raise ParseError(f"unknown config tag {tag!r}")
    return PointSet(tuple(pts), tag, labels)


def emit_pointset(ps: PointSet) -> str:
    out = [f"pointset {len(ps)} {ps.config_tag}"]
    out += [f"{x!r} {y!r}" for x, y in ps.points]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# partition and edge-list formats

def parse_partition(text: str, ps: PointSet) -> Partition:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty partition file", line=1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "partition":
        raise ParseError(f"bad header {header!r}, want 'partition <points> <trees>'",
                         line=lineno)
    try:
        npts, ntrees = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"bad counts in {header!r}", line=lineno) from None
    if npts != len(ps):
        raise ParseError(f"partition is on {npts} points, point set has {len(ps)}",
                         line=lineno)
    trees: list[tuple[tuple[int, int], ...]] = []
    current: list[tuple[int, int]] | None = None
    for lineno, line in lines[1:]:
        fields = line.split()
        if fields[0] == "tree":
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"bad tree header {line!r}", line=lineno)
            if current is not None:
                trees.append(tuple(current))
            if int(fields[1]) != len(trees):
                raise ParseError(f"expected 'tree {len(trees)}', got {line!r}", line=lineno)
            current = []
            continue
        if current is None:
            raise ParseError(f"edge line {line!r} before any 'tree' header", line=lineno)
        if len(fields) != 2:
            raise ParseError(f"want 'a b', got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"bad edge {line!r}", line=lineno) from None
        if not (0 <= a < npts and 0 <= b < npts) or a == b:
            raise ParseError(f"edge ({a}, {b}) invalid on {npts} points", line=lineno)
        current.append((min(a, b), max(a, b)))
    if current is not None:
        trees.append(tuple(current))
    if len(trees) != ntrees:
        raise ParseError(f"header promises {ntrees} trees, file has {len(trees)}")
    return Partition(ps=ps, trees=tuple(GeomTree(ps, t) for t in trees))


def emit_partition(p: Partition) -> str:
    out = [f"partition {len(p.ps)} {len(p.trees)}"]
    for i, t in enumerate(p.trees):
        out.append(f"tree {i}")
        out += [f"{a} {b}" for a, b in sorted(t.edges)]
    return "\n".join(out) + "\n"


def parse_edgelist(text: str) -> tuple[tuple[int, int], ...]:
    edges = []
    for lineno, line in _content_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"want 'a b', got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"bad edge {line!r}", line=lineno) from None
        edges.append((min(a, b), max(a, b)))
    return tuple(edges)


def emit_edgelist(edges) -> str:
    return "\n".join(f"{a} {b}" for a, b in sorted(edges)) + "\n"


# ---------------------------------------------------------------------------
# SVG rendering

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a")


@dataclass(frozen=True)
class RenderStyle:
    size: int = 640
    stroke_width: float = 1.6
    vertex_radius: float = 4.0
    font_size: float = 12.0
    palette: tuple[str, ...] = PALETTE
    show_labels: bool = True


def render_svg(p: Partition | GeomTree, style: RenderStyle | None = None) -> str:
    """Deterministic SVG: one color per tree, filled vertices, labels."""
    style = style or RenderStyle()
    trees = p.trees if isinstance(p, Partition) else (p,)
    ps = p.ps
    xs = [pt[0] for pt in ps.points]
    ys = [pt[1] for pt in ps.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    margin = 0.05 * span
    x0, y0 = min(xs) - margin, min(ys) - margin
    side = span + 2 * margin
    scale = style.size / side

    def sx(x: float) -> str:
        return f"{(x - x0) * scale:.3f}"

    def sy(y: float) -> str:
        # flip y so the drawing matches the usual mathematical orientation
        return f"{style.size - (y - y0) * scale:.3f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.size}"'
           f' height="{style.size}" viewBox="0 0 {style.size} {style.size}">']
    for i, t in enumerate(trees):
        color = style.palette[i % len(style.palette)]
        for a, b in sorted(t.edges):
            pa, pb = ps.points[a], ps.points[b]
            out.append(f'<line x1="{sx(pa[0])}" y1="{sy(pa[1])}" x2="{sx(pb[0])}"'
                       f' y2="{sy(pb[1])}" stroke="{color}"'
                       f' stroke-width="{style.stroke_width}"/>')
    for i, (x, y) in enumerate(ps.points):
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{style.vertex_radius}"'
                   f' fill="black"/>')
        if style.show_labels:
            out.append(f'<text x="{float(sx(x)) + 6:.3f}" y="{float(sy(y)) - 6:.3f}"'
                       f' font-size="{style.font_size}">{ps.label(i)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# input resolution

def load_pointset(value: str) -> PointSet:
    """File path, packaged preset name, or wheel<n> tag."""
    path = Path(value)
    if path.is_file():
        return parse_pointset(path.read_text())
    if value in presets.POINT_PRESETS:
        data = resources.files("planetrees").joinpath("data", f"{value}.points")
        return parse_pointset(data.read_text())
    wheel = _WHEEL_ARG.match(value)
    if wheel:
        return make_wheel(int(wheel.group(1)))
    raise ParseError(f"--input {value!r} is neither a file, a preset, nor wheel<n>")


def _load_choices(value: str | None) -> ConstructionChoices | None:
    if value is None:
        return None
    if value in presets.CHOICES_PRESETS:
        return presets.CHOICES_PRESETS[value]
    if value.lstrip().startswith("{"):
        text = value
    else:
        path = Path(value)
        if not path.is_file():
            raise ParseError(f"--choices {value!r} is neither a preset nor a file")
        text = path.read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad choices JSON: {exc}") from None
    allowed = {"star_side", "extend_side", "type4", "line"}
    unknown = set(raw) - allowed
    if unknown:
        raise ParseError(f"unknown choices keys {sorted(unknown)}")
    if "extend_side" in raw and raw["extend_side"] is not None:
        raw["extend_side"] = tuple(raw["extend_side"])
    if "line" in raw and raw["line"] is not None:
        raw["line"] = tuple(raw["line"])
    return ConstructionChoices(**raw)


def _write(out_path: str | None, text: str) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def _emit_report(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, default=_jsonable, sort_keys=True))
    else:
        print(human)


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "_asdict"):
        return obj._asdict()
    if hasattr(obj, "__dict__"):
        return obj.__dict__
    return str(obj)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_generate(args) -> int:
    if args.preset:
        ps = presets.figure_pointset(args.preset)
    else:
        value = args.config
        if value is None:
            raise InvalidParameter("generate needs --config or --preset")
        if (m := _WHEEL_ARG.match(value)):
            ps = make_wheel(int(m.group(1)), radius=args.radius)
        elif (m := _GON_ARG.match(value)):
            count = int(m.group(1))
            if count % 2 or count < 4:
                raise InvalidParameter(f"gon<m> needs even m >= 4, got {count}")
            pts = tuple((args.radius * math.cos(0.3 + 2 * math.pi * i / count),
                         args.radius * math.sin(0.3 + 2 * math.pi * i / count))
                        for i in range(count))
            ps = PointSet(pts, "convex")
        elif (m := _RANDOM_ARG.match(value)):
            count = int(m.group(1))
            if count % 2 or count < 4:
                raise InvalidParameter(f"random<m> needs even m >= 4, got {count}")
            rng = random.Random(args.seed)
            while True:
                angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(count))
                gaps = [b - a for a, b in zip(angles, angles[1:])]
                gaps.append(2 * math.pi - angles[-1] + angles[0])
                if min(gaps) > 1e-3:
                    break
            pts = tuple((math.cos(a), math.sin(a)) for a in angles)
            ps = PointSet(pts, "convex")
        else:
            raise InvalidParameter(
                f"--config {value!r}: want wheel<n>, gon<m>, or random<m>")
    text = emit_pointset(ps)
    _write(args.out, text)
    if args.json:
        print(json.dumps({"count": len(ps), "config_tag": ps.config_tag,
                          "points": list(ps.points)}))
    return 0


def _cmd_halving(args) -> int:
    ps = load_pointset(args.input)
    if args.labeling == "h":
        lab = h_labeling(ps)
        payload = {"pairs": list(lab.pairs), "relabeling": list(lab.relabeling)}
        human = "\n".join(f"{i} {j}" for i, j in lab.pairs)
    elif args.labeling == "w":
        lab = w_labeling(ps)
        payload = {"w": lab.w, "order": list(lab.order)}
        human = f"w {lab.w}\norder {' '.join(map(str, lab.order))}"
    else:
        lines = k_halving_lines(ps, args.k)
        payload = {"k": args.k, "lines": [[l.i, l.j] for l in lines]}
        human = "\n".join(f"{l.i} {l.j} {l.k}" for l in lines)
    _emit_report(args, payload, human)
    return 0


def _cmd_classify(args) -> int:
    ps = load_pointset(args.input)
    edges = parse_edgelist(Path(args.tree).read_text())
    rep = classify(GeomTree(ps, edges))
    payload = {
        "is_path": rep.is_path,
        "is_star": rep.is_star,
        "double_star": rep.double_star,
        "s_k": rep.s_k,
        "caterpillar": rep.caterpillar,
        "p4_symmetric": None if rep.p4_symmetric is None else {
            "type": rep.p4_symmetric.type, "path": rep.p4_symmetric.path},
        "w_caterpillar": rep.w_caterpillar,
        "symmetric": None if rep.symmetric is None else {
            "edge": rep.symmetric.edge},
    }
    human = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit_report(args, payload, human)
    return 0


def _write_partition_dir(args, p: Partition, extra: dict) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i, t in enumerate(p.trees):
        (out / f"tree_{i}.edges").write_text(emit_edgelist(t.edges))
    (out / "partition.txt").write_text(emit_partition(p))
    if args.svg:
        (out / "partition.svg").write_text(render_svg(p))
    if args.json:
        print(json.dumps({"out": str(out), "trees": len(p.trees), **extra},
                         default=_jsonable, sort_keys=True))
    else:
        print(f"wrote {len(p.trees)} trees to {out}")


def _cmd_wheel_partition(args) -> int:
    if args.tree.startswith("builtin:"):
        edges = presets.builtin_tree(args.tree.removeprefix("builtin:"), args.n)
    else:
        edges = parse_edgelist(Path(args.tree).read_text())
    p = build_wheel_partition(edges, args.n)
    analysis = analyze_wheel_partition(p)
    report = verify_partition(p)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lines = [f"verify: {'pass' if report.ok else 'fail'}",
             f"one_boundary_tree: {analysis.one_boundary_tree}",
             f"radial_run: {' '.join(f'{a}-{b}' for a, b in analysis.radial_run)}"]
    for i, st in enumerate(analysis.per_tree):
        lines.append(f"tree {i}: boundary={st.boundary_count} radial={st.radial_count}"
                     f" four_path={st.four_path}")
    (out / "analysis.txt").write_text("\n".join(lines) + "\n")
    _write_partition_dir(args, p, {
        "verify": report.ok,
        "one_boundary_tree": analysis.one_boundary_tree,
    })
    return 0 if report.ok else 1


def _cmd_halving_partition(args) -> int:
    ps = load_pointset(args.input)
    choices = _load_choices(args.choices)
    if args.theorem == 2:
        p = theorem2_partition(ps, args.t)
    elif args.theorem == 3:
        if args.r is None:
            raise InvalidParameter("--theorem 3 requires --r")
        p = theorem3_partition(ps, args.r, choices)
    else:
        if args.r is None:
            raise InvalidParameter("--theorem 4 requires --r")
        p = theorem4_partition(ps, args.r, choices)
    report = verify_partition(p)
    _write_partition_dir(args, p, {"verify": report.ok, "theorem": args.theorem})
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    ps = load_pointset(args.input)
    p = parse_partition(Path(args.partition).read_text(), ps)
    report = verify_partition(p)
    payload = {"ok": report.ok, "reason": report.reason, "witness": report.witness}
    human = "pass" if report.ok else f"fail: {report.reason} ({report.witness})"
    _emit_report(args, payload, human)
    return 0 if report.ok else 1


def _cmd_oracle(args) -> int:
    ps = load_pointset(args.input)
    found = brute_force_partitions(ps, limit=args.limit)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    blocks = []
    for trees in found:
        blocks.append(emit_partition(Partition(ps, tuple(GeomTree(ps, t) for t in trees))))
    (out / "partitions.txt").write_text("\n".join(blocks))
    if args.json:
        print(json.dumps({"count": len(found), "out": str(out)}))
    else:
        print(f"{len(found)} partitions -> {out}/partitions.txt")
    return 0


def _cmd_render(args) -> int:
    ps = load_pointset(args.input)
    if args.partition:
        target: Partition | GeomTree = parse_partition(
            Path(args.partition).read_text(), ps)
    elif args.tree:
        target = GeomTree(ps, parse_edgelist(Path(args.tree).read_text()))
    else:
        raise InvalidParameter("render needs --partition or --tree")
    svg = render_svg(target)
    _write(args.out, svg)
    if args.json:
        print(json.dumps({"bytes": len(svg.encode())}))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="RNG seed")
    parser = argparse.ArgumentParser(
        prog="planetrees",
        description="Partitions of complete geometric graphs into plane spanning trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common],
                       help="emit a point set (wheel<n>, gon<m>, random<m>, or preset)")
    p.add_argument("--config", help="wheel<n> | gon<m> | random<m>")
    p.add_argument("--preset", choices=presets.POINT_PRESETS)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("halving", parents=[common], help="k-halving lines / labelings")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--labeling", choices=("h", "w"))
    p.set_defaults(fn=_cmd_halving)

    p = sub.add_parser("classify", parents=[common], help="classify a geometric tree")
    p.add_argument("--input", required=True)
    p.add_argument("--tree", required=True, help="edge-list file")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("wheel-partition", parents=[common],
                       help="build the wheel partition from a w-caterpillar")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tree", required=True,
                   help="edge-list file, builtin:fig2i, or builtin:doublestar")
    p.add_argument("--out", required=True)
    p.add_argument("--svg", action="store_true")
    p.set_defaults(fn=_cmd_wheel_partition)

    p = sub.add_parser("halving-partition", parents=[common],
                       help="build a halving-line partition (theorems 2-4)")
    p.add_argument("--input", required=True)
    p.add_argument("--theorem", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, choices=(0, 1), default=0)
    p.add_argument("--choices", help="preset name or JSON file")
    p.add_argument("--out", required=True)
    p.add_argument("--svg", action="store_true")
    p.set_defaults(fn=_cmd_halving_partition)

    p = sub.add_parser("verify", parents=[common], help="verify a partition file")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force enumerate partitions (small n)")
    p.add_argument("--input", required=True)
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("render", parents=[common], help="render to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--partition")
    p.add_argument("--tree")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CHECK_FAILURES as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except _USAGE_FAILURES as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PlaneTreesError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
