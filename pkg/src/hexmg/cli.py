"""Command-line entry point wiring all modules together.

Subcommands: ``lattice``, ``cluster``, ``region``, ``zf``, ``converse``,
``schedule``, ``verify-all``.  Common flags: ``--out DIR``, ``--seed S``,
``--config FILE`` (a flat ``key = value`` file mirroring flag names; explicit
flags override config values).  Exit codes: 0 success, 1 verification or
validation failure, 2 usage error.  All emitted files are byte-identical for
identical configurations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import clustering, lattice, partitions, precoding, regions, schedules

USAGE_ERROR = 2
CHECK_FAILED = 1


def decimal_str(fr: Fraction, places: int = 6) -> str:
    """Exact decimal expansion of a rational, round-half-even."""
    with localcontext() as ctx:
        ctx.prec = 80
        d = Decimal(fr.numerator) / Decimal(fr.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _write_or_print(text: str, path: Optional[str], out_dir: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    if out_dir and not os.path.isabs(path):
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, path)
    with open(path, "w", newline="") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# lattice

def cmd_lattice(args: argparse.Namespace) -> int:
    net = lattice.build_network(args.radius, args.m)
    edges = []
    for s in net.sectors:
        for nb in net.tx_neighbors[s]:
            edges.append(f"{s[0]},{s[1]},{s[2]},{nb[0]},{nb[1]},{nb[2]}")
    edges.sort()
    if args.emit:
        lines = ["sector_cell_q,sector_cell_r,orientation,neighbor_cell_q,neighbor_cell_r,neighbor_orientation"]
        lines += edges
        _write_or_print("\n".join(lines) + "\n", args.emit, args.out)
    interior_ok = all(
        len(net.tx_neighbors[s]) == 4
        for s in net.sectors
        if net.is_interior_cell((s[0], s[1]))
    )
    print(
        f"lattice radius={args.radius} m={args.m}: {len(net.cells)} cells, "
        f"{len(net.sectors)} sectors, {len(edges)} directed interference links, "
        f"interior degree 4: {'ok' if interior_ok else 'VIOLATED'}"
    )
    return 0 if interior_ok else CHECK_FAILED


# ---------------------------------------------------------------------------
# cluster

def cmd_cluster(args: argparse.Namespace) -> int:
    net = lattice.build_network(args.radius)
    mode = clustering.MODE_MIXED if args.mode == "mixed" else clustering.MODE_SLOW_ONLY
    plan = clustering.assign_messages(clustering.clusters(net, args.t), mode)

    cluster_id: Dict[lattice.Sector, int] = {}
    master_users = set()
    for i, cl in enumerate(plan.clusters):
        for s in cl.sectors:
            cluster_id[s] = i
        if cl.master_user is not None:
            master_users.add(cl.master_user)

    if args.emit:
        lines = ["cell_q,cell_r,orientation,role,cluster_id"]
        for s in net.sectors:
            role = plan.assignment[s]
            if s in master_users:
                role = "MASTER"
            lines.append(f"{s[0]},{s[1]},{s[2]},{role},{cluster_id.get(s, -1)}")
        _write_or_print("\n".join(lines) + "\n", args.emit, args.out)

    status = 0
    t = args.t
    if args.check_counts:
        tx = clustering.count_links(plan, clustering.TX)
        rx = clustering.count_links(plan, clustering.RX)
        ok = tx == 36 * t * t and rx == 18 * t * t
        print(
            f"cluster t={t}: tx links {tx} (want {36 * t * t}), "
            f"rx links {rx} (want {18 * t * t}): {'ok' if ok else 'MISMATCH'}"
        )
        if not ok:
            status = CHECK_FAILED
    fracs = clustering.assignment_fractions(plan)
    frac_str = ", ".join(
        f"{role.lower()} {decimal_str(fr, 4)}" for role, fr in sorted(fracs.items())
    )
    print(
        f"cluster t={t} mode={args.mode}: {len(plan.masters)} masters, "
        f"{len(plan.clusters)} clusters, interior fractions: {frac_str}"
    )
    return status


# ---------------------------------------------------------------------------
# region

def _region_rows(name: str, region: regions.Region, samples: int) -> List[str]:
    pts = regions.boundary_samples(region, max(2, samples))
    return [f"{name},{decimal_str(p.sf)},{decimal_str(p.ss)}" for p in pts]


def region_svg(curves: Sequence[Tuple[str, List[regions.MGPoint]]]) -> str:
    width, height, margin = 640, 480, 70
    sf_max = max((float(p.sf) for _, pts in curves for p in pts), default=1.0) or 1.0
    ss_max = max((float(p.ss) for _, pts in curves for p in pts), default=1.0) or 1.0

    def sx(v: float) -> str:
        return f"{margin + (width - 2 * margin) * v / (1.05 * sf_max):.2f}"

    def sy(v: float) -> str:
        return f"{height - margin - (height - 2 * margin) * v / (1.05 * ss_max):.2f}"

    colors = ("#1f6fb2", "#b23a1f", "#3ab21f", "#b21f8e")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{margin}" y2="{margin}" '
        f'stroke="black"/>',
        f'<text x="{width - margin + 8}" y="{height - margin + 4}" '
        f'font-size="14">S^(F)</text>',
        f'<text x="{margin - 10}" y="{margin - 12}" font-size="14">S^(S)</text>',
    ]
    for i, (name, pts) in enumerate(curves):
        coords = " ".join(f"{sx(float(p.sf))},{sy(float(p.ss))}" for p in pts)
        color = colors[i % len(colors)]
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{margin + 10}" y="{margin + 18 * (i + 1)}" font-size="12" '
            f'fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _default_t_values(args: argparse.Namespace) -> Optional[List[int]]:
    if args.t_sweep:
        return None
    if args.t is not None:
        return [args.t]
    t_star = (args.d - 2) // 4
    return [t_star] if t_star >= 1 else None


def cmd_region(args: argparse.Namespace) -> int:
    params = regions.SystemParams(m=args.m, mu_tx=args.mu_tx, mu_rx=args.mu_rx, d=args.d)
    t_values = _default_t_values(args)
    which = args.which or "both"
    curves: List[Tuple[str, regions.Region]] = []
    if which in ("inner", "both"):
        curves.append(("inner", regions.inner_bound(params, t_values)))
    if which in ("outer", "both"):
        curves.append(("outer", regions.outer_bound(params)))

    if args.format == "csv":
        lines = ["bound,sf,ss"]
        for name, region in curves:
            lines += _region_rows(name, region, args.samples)
        _write_or_print("\n".join(lines) + "\n", args.emit, args.out)
    elif args.format == "json":
        payload = {
            "m": args.m,
            "d": args.d,
            "mu_tx": [params.mu_tx.numerator, params.mu_tx.denominator],
            "mu_rx": [params.mu_rx.numerator, params.mu_rx.denominator],
            "t_values": t_values,
            "bounds": {
                name: [
                    {
                        "sf": [v.sf.numerator, v.sf.denominator],
                        "ss": [v.ss.numerator, v.ss.denominator],
                    }
                    for v in region.vertices
                ]
                for name, region in curves
            },
        }
        _write_or_print(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.emit, args.out)
    else:  # svg
        sampled = [
            (name, regions.boundary_samples(region, max(2, args.samples)))
            for name, region in curves
        ]
        _write_or_print(region_svg(sampled), args.emit, args.out)
    return 0


# ---------------------------------------------------------------------------
# zf

def cmd_zf(args: argparse.Namespace) -> int:
    results = precoding.run_trials(
        args.t, args.m, args.trials, seed=args.seed, scheme=args.scheme, tol=args.tol
    )
    lines = ["trial,solvable,max_cross_residual,min_self_rank"]
    for i, res in enumerate(results):
        lines.append(
            f"{i},{str(res.solvable).lower()},{res.max_cross_residual:.3e},{res.min_self_rank}"
        )
    if args.emit:
        _write_or_print("\n".join(lines) + "\n", args.emit, args.out)
    n_ok = sum(1 for r in results if r.solvable)
    worst = max(r.max_cross_residual for r in results)
    verdict = "PASS" if n_ok == len(results) else "FAIL"
    print(
        f"zf t={args.t} m={args.m} scheme={args.scheme} trials={args.trials}: "
        f"{verdict} ({n_ok}/{len(results)} solvable, worst residual {worst:.3e}, "
        f"tol {args.tol:g})"
    )
    return 0 if verdict == "PASS" else CHECK_FAILED


# ---------------------------------------------------------------------------
# converse

def cmd_converse(args: argparse.Namespace) -> int:
    kind = args.partition or ("four" if args.d is not None else "two")
    if kind == "four" and args.d is None:
        print("converse: --d is required for the four-colour partition", file=sys.stderr)
        return USAGE_ERROR
    net = lattice.build_network(args.radius)
    part = (
        partitions.partition_two(net)
        if kind == "two"
        else partitions.partition_four(net, args.d)
    )
    rows = partitions.census_fractions(net, part)
    lines = ["color,count,fraction,limit,abs_error"]
    for row in rows:
        lines.append(
            f"{row.color},{row.count},{decimal_str(row.fraction)},"
            f"{decimal_str(row.limit)},{decimal_str(row.abs_error)}"
        )
    _write_or_print("\n".join(lines) + "\n", args.emit, args.out)
    if args.emit:
        print(f"converse partition={kind} radius={args.radius}: census written to {args.emit}")
    if args.check_fractions:
        worst = max(row.abs_error for row in rows)
        ok = worst <= Fraction(1, 50)
        print(
            f"converse fraction check: worst error {decimal_str(worst)} "
            f"({'within' if ok else 'EXCEEDS'} 0.02)"
        )
        return 0 if ok else CHECK_FAILED
    return 0


# ---------------------------------------------------------------------------
# schedule

def cmd_schedule(args: argparse.Namespace) -> int:
    d = args.d if args.d is not None else args.dt + args.dr
    if args.algorithm == 1:
        part = partitions.partition_two(lattice.build_network(2))
        plan = schedules.schedule_two_color(part, args.dt, args.dr, d)
    else:
        spacing = max(2, d)
        part = partitions.partition_four(lattice.build_network(3 * spacing), spacing)
        plan = schedules.schedule_four_color(part, args.dt, args.dr, d)
    print(f"schedule algorithm={args.algorithm} dt={args.dt} dr={args.dr} d={d}")
    print(f"{'#':>3} {'kind':<12} {'round':>5}  step")
    for i, step in enumerate(plan.steps):
        rnd = step.round_index if step.kind in (schedules.RX_CONF, schedules.TX_CONF) else "-"
        print(f"{i:>3} {step.kind:<12} {rnd!s:>5}  {step.name}")
    if not args.validate:
        return 0
    report = schedules.validate_schedule(plan)
    if report.ok:
        print("schedule: VALID (all dependencies, budgets and goals satisfied)")
        return 0
    print("schedule: INVALID")
    for v in report.violations:
        print(f"  - {v}")
    return CHECK_FAILED


# ---------------------------------------------------------------------------
# verify-all

def _fig6_checks(add: Callable[[str, bool, str], None]) -> None:
    large = regions.SystemParams(m=3, mu_tx=10, mu_rx=10, d=20)
    small = regions.SystemParams(m=3, mu_tx=Fraction(1, 10), mu_rx=Fraction(1, 5), d=20)

    def disp(region: regions.Region) -> List[Tuple[str, str]]:
        return sorted((decimal_str(v.sf, 4), decimal_str(v.ss, 4)) for v in region.vertices)

    cases = [
        ("outer bound, large prelogs", regions.outer_bound(large),
         [("0.0000", "0.0000"), ("0.0000", "2.9964"), ("1.5000", "0.0000"), ("1.5000", "1.4964")]),
        ("outer bound, small prelogs", regions.outer_bound(small),
         [("0.0000", "0.0000"), ("0.0000", "1.7667"), ("1.5000", "0.0000"), ("1.5000", "0.2667")]),
        ("inner bound, large prelogs", regions.inner_bound(large, [4]),
         [("0.0000", "0.0000"), ("0.0000", "2.7500"), ("1.0000", "1.7500"), ("1.5000", "0.0000")]),
        ("inner bound, small prelogs", regions.inner_bound(small, [4]),
         [("0.0000", "0.0000"), ("0.0000", "1.5536"), ("1.4792", "0.0727"), ("1.5000", "0.0000")]),
    ]
    for name, region, want in cases:
        got = disp(region)
        add(f"region: {name}", got == want, f"vertices {got}")


def _counting_checks(add: Callable[[str, bool, str], None]) -> None:
    for t in (1, 2, 3, 4):
        net = lattice.build_network(6 * t)
        plan = clustering.clusters(net, t)
        tx = clustering.count_links(plan, clustering.TX)
        rx = clustering.count_links(plan, clustering.RX)
        add(
            f"counting: links per cluster t={t}",
            tx == 36 * t * t and rx == 18 * t * t,
            f"tx {tx}/{36 * t * t}, rx {rx}/{18 * t * t}",
        )
        ok_msgs = True
        detail = []
        for m in (1, 3):
            tx_m = clustering.conferencing_message_count(plan, "s4", m, clustering.TX)
            rx_m = clustering.conferencing_message_count(plan, "s4", m, clustering.RX)
            ok_msgs &= tx_m == 2 * m * t * (8 * t * t + 3 * t - 2)
            ok_msgs &= rx_m == 3 * m * (3 * t * t - 1)
            detail.append(f"m={m}: tx {tx_m}, rx {rx_m}")
        add(f"counting: conferencing messages t={t}", ok_msgs, "; ".join(detail))
        ok_prelogs = True
        for m in (1, 3):
            r2 = clustering.required_prelogs("s2", t, m)
            r3 = clustering.required_prelogs("s3", t, m)
            r4 = clustering.required_prelogs("s4", t, m)
            r5 = clustering.required_prelogs("s5", t, m)
            ok_prelogs &= (r2.mu_tx, r2.mu_rx) == (0, Fraction(m * (2 * t - 1), 3))
            ok_prelogs &= (r3.mu_tx, r3.mu_rx) == (Fraction(m * (2 * t - 1), 3), 0)
            ok_prelogs &= r4.mu_tx == Fraction(
                2 * m * t * (8 * t * t + 3 * t - 2), 36 * t * t
            ) and r4.mu_rx == Fraction(3 * m * (3 * t * t - 1), 18 * t * t)
            ok_prelogs &= r5.mu_tx == Fraction(
                6 * m * t * (2 * t - 1), 36 * t * t
            ) and r5.mu_rx == Fraction(m * (8 * t ** 3 + 6 * t * t + t - 3), 18 * t * t)
            ok_prelogs &= r4.total == r5.total
        add(
            f"counting: prelog formulas and s4/s5 duality t={t}",
            ok_prelogs,
            f"sum {clustering.required_prelogs('s4', t, 3).total}",
        )


def _fraction_checks(add: Callable[[str, bool, str], None], radius: int) -> None:
    tol = Fraction(1, 50)
    net = lattice.build_network(radius)
    for t in (1, 2, 3, 4):
        plan = clustering.assign_messages(clustering.clusters(net, t), clustering.MODE_MIXED)
        fr = clustering.assignment_fractions(plan)
        want = {
            clustering.SILENT: Fraction(1, 3 * t),
            clustering.FAST: Fraction(1, 3),
            clustering.SLOW: Fraction(2 * t - 1, 3 * t),
        }
        worst = max(abs(fr[k] - want[k]) for k in want)
        add(
            f"fractions: roles t={t} radius={radius}",
            worst <= tol,
            f"worst error {decimal_str(worst)}",
        )
    part2 = partitions.partition_two(net)
    rows = partitions.census_fractions(net, part2)
    worst2 = max(r.abs_error for r in rows)
    add(f"fractions: two-colour radius={radius}", worst2 <= tol, f"worst error {decimal_str(worst2)}")
    part4 = partitions.partition_four(net, 3)
    rows4 = partitions.census_fractions(net, part4)
    worst4 = max(r.abs_error for r in rows4)
    add(f"fractions: four-colour d=3 radius={radius}", worst4 <= tol, f"worst error {decimal_str(worst4)}")

    shrink_ok = True
    details = []
    for small, big in ((20, 40),):
        net_s, net_b = lattice.build_network(small), lattice.build_network(big)
        for t in (1, 2):
            fr_s = clustering.assignment_fractions(
                clustering.assign_messages(clustering.clusters(net_s, t), clustering.MODE_MIXED)
            )
            fr_b = clustering.assignment_fractions(
                clustering.assign_messages(clustering.clusters(net_b, t), clustering.MODE_MIXED)
            )
            want = {
                clustering.SILENT: Fraction(1, 3 * t),
                clustering.FAST: Fraction(1, 3),
                clustering.SLOW: Fraction(2 * t - 1, 3 * t),
            }
            e_s = max(abs(fr_s[k] - want[k]) for k in want)
            e_b = max(abs(fr_b[k] - want[k]) for k in want)
            shrink_ok &= e_b < e_s
            details.append(f"t={t}: {decimal_str(e_s)} -> {decimal_str(e_b)}")
        for kind, builder in (
            ("two", partitions.partition_two),
            ("four", lambda n: partitions.partition_four(n, 3)),
        ):
            e_s = max(r.abs_error for r in partitions.census_fractions(net_s, builder(net_s)))
            e_b = max(r.abs_error for r in partitions.census_fractions(net_b, builder(net_b)))
            shrink_ok &= e_b < e_s
            details.append(f"{kind}: {decimal_str(e_s)} -> {decimal_str(e_b)}")
    add("fractions: error shrinks radius 20 -> 40", shrink_ok, "; ".join(details))


def _zf_checks(add: Callable[[str, bool, str], None], trials: int, seed: int) -> None:
    for t in (1, 2):
        for m in (1, 2):
            results = precoding.run_trials(t, m, trials, seed=seed, scheme="s4")
            n_ok = sum(1 for r in results if r.solvable)
            worst = max(r.max_cross_residual for r in results)
            add(
                f"zf: t={t} m={m} scheme=s4 trials={trials}",
                n_ok == len(results),
                f"{n_ok}/{len(results)} solvable, worst residual {worst:.3e}",
            )


def _schedule_checks(add: Callable[[str, bool, str], None]) -> None:
    part2 = partitions.partition_two(lattice.build_network(2))
    part4 = partitions.partition_four(lattice.build_network(9), 3)
    for d in (3, 20):
        ok = True
        for d_t in range(0, d + 1):
            d_r = d - d_t
            p1 = schedules.schedule_two_color(part2, d_t, d_r, d)
            p2 = schedules.schedule_four_color(part4, d_t, d_r, d)
            ok &= schedules.validate_schedule(p1).ok
            ok &= schedules.validate_schedule(p2).ok
        add(f"schedules: all splits validate d={d}", ok, f"{d + 1} splits x 2 algorithms")

    plan = schedules.schedule_two_color(part2, 2, 2, 4)
    ok_del = True
    for i, step in enumerate(plan.steps):
        if step.kind in (schedules.DECODE, schedules.RECONSTRUCT):
            ok_del &= not schedules.validate_schedule(plan.without_step(i)).ok
    no_genie = schedules.SchedulePlan(
        steps=plan.steps,
        d_t=plan.d_t,
        d_r=plan.d_r,
        d=plan.d,
        initial=plan.initial - {schedules.GENIE},
        goals=plan.goals,
    )
    ok_del &= not schedules.validate_schedule(no_genie).ok
    add("schedules: decode/reconstruct deletions and genie removal break the plan", ok_del, "")


def _structural_checks(add: Callable[[str, bool, str], None]) -> None:
    ok_sub, ok_mono = True, True
    mus = [Fraction(0), Fraction(1, 10), Fraction(1, 5), Fraction(1), Fraction(10)]
    for m in (1, 2, 3):
        for d in (4, 8, 12, 20):
            for mu_tx in mus:
                for mu_rx in mus:
                    p = regions.SystemParams(m=m, mu_tx=mu_tx, mu_rx=mu_rx, d=d)
                    ok_sub &= regions.is_subset(
                        regions.inner_bound(p), regions.outer_bound(p)
                    )
            prev_inner = prev_outer = None
            for mu in mus:
                p = regions.SystemParams(m=m, mu_tx=mu, mu_rx=mu, d=d)
                inner = regions.inner_bound(p)
                outer = regions.outer_bound(p)
                if prev_inner is not None:
                    ok_mono &= regions.is_subset(prev_inner, inner)
                    ok_mono &= regions.is_subset(prev_outer, outer)
                prev_inner, prev_outer = inner, outer
    add("structural: inner bound inside outer bound over sweep", ok_sub, "")
    add("structural: bounds monotone in prelogs", ok_mono, "")

    ok_sum = True
    big = regions.SystemParams(m=3, mu_tx=100, mu_rx=100, d=40)
    for t in range(1, regions.mixed_dual_t_max(40) + 1):
        ps = regions.scheme_point(regions.FAMILY_SLOW, t, big)
        pm = regions.scheme_point(regions.FAMILY_MIXED, t, big)
        ok_sum &= ps.sf + ps.ss == pm.sf + pm.ss == Fraction(3 * (3 * t - 1), 3 * t)
    add("structural: mixed and all-slow points share the sum gain", ok_sum, "")


def cmd_verify_all(args: argparse.Namespace) -> int:
    results: List[Tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str) -> None:
        results.append((name, ok, detail))

    _fig6_checks(add)
    _counting_checks(add)
    _fraction_checks(add, args.radius)
    _zf_checks(add, args.zf_trials, args.seed)
    _schedule_checks(add)
    _structural_checks(add)

    lines = []
    for name, ok, detail in results:
        suffix = f" ({detail})" if detail else ""
        lines.append(f"CHECK {name}: {'PASS' if ok else 'FAIL'}{suffix}")
    n_pass = sum(1 for _, ok, _ in results if ok)
    lines.append(f"verify-all: {n_pass}/{len(results)} checks passed")
    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "verify_report.txt"), "w", newline="") as fh:
            fh.write(report)
    return 0 if n_pass == len(results) else CHECK_FAILED


# ---------------------------------------------------------------------------
# parser plumbing

def _load_config(path: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _inject_config(argv: List[str]) -> List[str]:
    """Turn config-file entries into flags placed before the explicit ones."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise ValueError("--config needs a file path")
    kv = _load_config(argv[i + 1])
    flags: List[str] = []
    for key, value in kv.items():
        if value.lower() == "true":
            flags.append(f"--{key}")
        elif value.lower() == "false":
            continue
        else:
            flags.extend([f"--{key}", value])
    rest = argv[:i] + argv[i + 2 :]
    if not rest:
        return flags
    return [rest[0]] + flags + rest[1:]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="directory for emitted files")
    common.add_argument("--seed", type=int, default=0, help="global random seed")

    parser = argparse.ArgumentParser(
        prog="hexmg",
        description="sectorized hexagonal network multiplexing-gain toolkit",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("lattice", parents=[common], help="build the lattice and emit its interference links")
    p.add_argument("--radius", type=_positive_int, required=True)
    p.add_argument("--m", type=_positive_int, default=1)
    p.add_argument("--emit", help="CSV file for the directed interference links")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("cluster", parents=[common], help="cluster decomposition and message assignment")
    p.add_argument("--radius", type=_positive_int, required=True)
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--mode", choices=("slow", "mixed"), default="slow")
    p.add_argument("--check-counts", action="store_true")
    p.add_argument("--emit", help="CSV file for per-sector roles")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("region", parents=[common], help="inner/outer multiplexing-gain regions")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--mu-tx", type=_fraction, default=Fraction(0))
    p.add_argument("--mu-rx", type=_fraction, default=Fraction(0))
    p.add_argument("--d", type=_positive_int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--inner", dest="which", action="store_const", const="inner")
    group.add_argument("--outer", dest="which", action="store_const", const="outer")
    group.add_argument("--both", dest="which", action="store_const", const="both")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--samples", type=int, default=2, help="boundary sample count")
    p.add_argument("--t", type=_positive_int, default=None, help="single cluster parameter (default: floor((d-2)/4))")
    p.add_argument("--t-sweep", action="store_true", help="sweep every admissible t")
    p.add_argument("--emit", help="output file (default: stdout)")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("zf", parents=[common], help="zero-forcing precoder certification")
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--scheme", choices=("s3", "s4", "s5"), default="s4")
    p.add_argument("--emit", help="CSV file for per-trial results")
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("converse", parents=[common], help="partition censuses for the outer bound")
    p.add_argument("--radius", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, default=None)
    p.add_argument("--partition", choices=("two", "four"), default=None)
    p.add_argument("--check-fractions", action="store_true")
    p.add_argument("--emit", help="CSV file for the census (default: stdout)")
    p.set_defaults(func=cmd_converse)

    p = sub.add_parser("schedule", parents=[common], help="super-receiver schedule validation")
    p.add_argument("--algorithm", type=int, choices=(1, 2), required=True)
    p.add_argument("--dt", type=int, required=True)
    p.add_argument("--dr", type=int, required=True)
    p.add_argument("--d", type=_positive_int, default=None)
    p.add_argument("--validate", action="store_true")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("verify-all", parents=[common], help="run every verification suite")
    p.add_argument("--radius", type=_positive_int, default=30)
    p.add_argument("--zf-trials", type=_positive_int, default=100)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _inject_config(argv)
    except (OSError, ValueError) as exc:
        print(f"hexmg: config error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_help()
        return USAGE_ERROR
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"hexmg: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
