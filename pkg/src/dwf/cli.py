"""Command-line front door: build, check, compute, enumerate, export.

Exit codes: 0 success, 1 a verification or membership check failed,
2 usage error (bad flags, missing or malformed files).  Every JSON the
tool writes embeds dimension, primitive polynomial, seed and tool version.
The environment variable DWF_TOLERANCE_SCALE multiplies all numeric
tolerances (default 1.0).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .classicality import brute_force_min, classify, convex_decomposition, min_wigner
from .clifford import fourier_operator, is_clifford, squeezing_operator
from .formats import (
    FormatError,
    mub_to_payload,
    net_from_payload,
    net_to_payload,
    read_json,
    state_from_payload,
    unitary_from_payload,
    wigner_to_csv,
    write_json,
)
from .galois import SUPPORTED_DIMENSIONS, field
from .geometry import build_striations, line_points
from .mub import standard_mub, unbiasedness_report
from .pauli import standard_sets
from .quantum_net import enumerate_nets, is_flow, net_count, standard_context
from .verification import DEFAULT_SEED, run_verification
from .wigner import wigner_function


@dataclass
class RunConfig:
    subcommand: str
    dimension: int | None
    seed: int
    args: argparse.Namespace


def _dimension(value: str) -> int:
    d = int(value)
    if d not in SUPPORTED_DIMENSIONS:
        raise argparse.ArgumentTypeError(
            f"dimension {d} unsupported; choose from {SUPPORTED_DIMENSIONS}"
        )
    return d


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dwf",
        description="Discrete Wigner functions on finite-field phase space.",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed recorded in outputs and used by randomized checks")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_field = sub.add_parser("field", help="print field tables and companion matrix")
    p_field.add_argument("--p", type=int, required=True)
    p_field.add_argument("--n", type=int, required=True)
    p_field.add_argument("--tables", action="store_true")

    p_geo = sub.add_parser("geometry", help="print striations and their lines")
    p_geo.add_argument("--d", type=_dimension, required=True)
    p_geo.add_argument("--striations", action="store_true")

    p_pauli = sub.add_parser("pauli", help="print the d+1 commuting sets")
    p_pauli.add_argument("--d", type=_dimension, required=True)
    p_pauli.add_argument("--sets", action="store_true")

    p_mub = sub.add_parser("mub", help="print bases and the unbiasedness report")
    p_mub.add_argument("--d", type=_dimension, required=True)
    p_mub.add_argument("--check", action="store_true")
    p_mub.add_argument("--json", metavar="PATH", help="export bases as JSON")

    p_nets = sub.add_parser("nets", help="enumerate or export quantum nets")
    p_nets.add_argument("--d", type=_dimension, required=True)
    p_nets.add_argument("--fix-axes", action="store_true")
    p_nets.add_argument("--count-only", action="store_true")
    p_nets.add_argument("--ray-choices", metavar="J,J,...",
                        help="comma-separated ray choices selecting one net")
    p_nets.add_argument("--out", metavar="PATH", help="write the selected net as JSON")

    p_wig = sub.add_parser("wigner", help="Wigner table of a state under a net")
    p_wig.add_argument("--state", required=True, metavar="S.json")
    p_wig.add_argument("--net", required=True, metavar="N.json")
    p_wig.add_argument("--out", required=True, metavar="W.csv")

    p_cls = sub.add_parser("classicality", help="membership report and decomposition")
    p_cls.add_argument("--state", required=True, metavar="S.json")
    p_cls.add_argument("--decompose", metavar="OUT.json")
    p_cls.add_argument("--brute-force", action="store_true",
                       help="cross-check the closed form by full net enumeration")

    p_clif = sub.add_parser("clifford", help="Clifford checks and phase-space scans")
    p_clif.add_argument("--check", metavar="U.json")
    p_clif.add_argument("--no-flow-scan", action="store_true",
                        help="scan the Fourier transform over nets for flows")
    p_clif.add_argument("--squeeze", action="store_true",
                        help="synthesize the squeezing operator and print its table")
    p_clif.add_argument("--d", type=_dimension)

    p_verify = sub.add_parser("verify", help="run the invariant suite for a dimension")
    p_verify.add_argument("--d", type=_dimension, required=True)
    return parser


def _cmd_field(cfg: RunConfig) -> int:
    args = cfg.args
    d = args.p**args.n
    try:
        gf = field(d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if gf.p != args.p or gf.n != args.n:
        print(f"error: p={args.p}, n={args.n} is not a supported field", file=sys.stderr)
        return 2
    poly = " + ".join(
        f"{c}*x^{i}" if i else str(c)
        for i, c in enumerate(gf.primitive_poly) if c
    )
    print(f"GF({d}) = GF({gf.p}^{gf.n}), primitive polynomial {poly}")
    print(f"generator index {gf.generator.index}")
    print("companion matrix M:")
    for row in gf.companion:
        print("  " + " ".join(f"{x:2d}" for x in row))
    if args.tables:
        width = len(str(d - 1))
        for title, op in (("addition", lambda a, b: a + b), ("multiplication", lambda a, b: a * b)):
            print(f"{title} table (element indices):")
            header = " " * (width + 2) + " ".join(f"{j:{width}d}" for j in range(d))
            print("  " + header.strip())
            for a in gf.elements:
                row = " ".join(f"{op(a, b).index:{width}d}" for b in gf.elements)
                print(f"  {a.index:{width}d}| {row}")
    return 0


def _cmd_geometry(cfg: RunConfig) -> int:
    d = cfg.args.d
    striations = build_striations(field(d))
    print(f"d={d}: {len(striations)} striations of {d} lines each")
    if cfg.args.striations:
        for s in striations:
            print(f"striation {s.kappa}: {s.describe()}")
            for ln in s.lines:
                pts = sorted(line_points(ln), key=lambda pt: pt.index)
                pts_txt = " ".join(f"({pt.q.index},{pt.p.index})" for pt in pts)
                print(f"  {ln.b.index}*q + {ln.a.index}*p = {ln.c.index}: {pts_txt}")
    return 0


def _cmd_pauli(cfg: RunConfig) -> int:
    d = cfg.args.d
    gf = field(d)
    sets = standard_sets(gf)
    print(f"d={d}: {len(sets)} disjoint maximal commuting sets")
    if cfg.args.sets:
        for kappa, s in enumerate(sets, start=1):
            print(f"set {kappa}: avec={s.avec} bvec={s.bvec}")
            for m in s.members:
                print(f"  T(q={m.qvec}, p={m.pvec})")
    return 0


def _cmd_mub(cfg: RunConfig) -> int:
    d = cfg.args.d
    mub = standard_mub(d)
    report = unbiasedness_report(mub)
    print(f"d={d}: {len(mub.bases)} bases")
    print(f"max |overlap|^2 deviation: {report.max_deviation:.3e} at {report.worst_pair}")
    if cfg.args.check:
        for kappa, basis in enumerate(mub.bases, start=1):
            print(f"basis {kappa} (rows are vectors, entries re+im):")
            for j in range(d):
                amps = " ".join(f"{z.real:+.4f}{z.imag:+.4f}j" for z in basis.vector(j))
                print(f"  |{kappa},{j}>: {amps}")
    if cfg.args.json:
        write_json(cfg.args.json, mub_to_payload(mub), d, cfg.seed)
        print(f"wrote {cfg.args.json}")
    return 0


def _cmd_nets(cfg: RunConfig) -> int:
    args = cfg.args
    d = args.d
    gf = field(d)
    total = net_count(d, args.fix_axes)
    if args.count_only:
        print(total)
        return 0
    if args.ray_choices:
        try:
            choices = tuple(int(x) for x in args.ray_choices.split(","))
        except ValueError:
            print("error: field 'ray_choices' must be comma-separated integers", file=sys.stderr)
            return 2
        try:
            net = standard_context(d).complete(choices)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"net {net.ray_choices} on d={d}")
        if args.out:
            write_json(args.out, net_to_payload(net), d, cfg.seed)
            print(f"wrote {args.out}")
        return 0
    if d > 5:
        print(f"error: enumeration of {total} nets at d={d} is refused; "
              "use --ray-choices to select one", file=sys.stderr)
        return 2
    count = 0
    for net in enumerate_nets(gf, fix_axes=args.fix_axes):
        print(",".join(str(r) for r in net.ray_choices))
        count += 1
    print(f"total: {count}")
    if args.out:
        print("error: --out needs --ray-choices", file=sys.stderr)
        return 2
    return 0


def _cmd_wigner(cfg: RunConfig) -> int:
    args = cfg.args
    state = state_from_payload(read_json(args.state))
    net = net_from_payload(read_json(args.net))
    if state.dim != net.dim:
        raise FormatError(
            f"field 'dim': state is {state.dim}-dimensional, net is {net.dim}-dimensional"
        )
    table = wigner_function(state, net)
    with open(args.out, "w") as fh:
        fh.write(wigner_to_csv(table))
    print(f"wrote {args.out}: sum={table.values.sum():.12f}, min={table.min():.12f}")
    return 0


def _cmd_classicality(cfg: RunConfig) -> int:
    args = cfg.args
    state = state_from_payload(read_json(args.state))
    d = state.dim
    if d not in SUPPORTED_DIMENSIONS:
        raise FormatError(f"field 'dim': {d} is not a supported dimension")
    gf = field(d)
    mub = standard_mub(d)
    out = classify(state, mub, gf)
    rep = out.report
    print(f"min_wigner: {rep.min_wigner:.12f}")
    print(f"sum_of_minima: {rep.sum_of_minima:.12f}")
    print(f"classical: {rep.classical}")
    if rep.witness_ray_choices is not None:
        print(f"witness: ray_choices={rep.witness_ray_choices} "
              f"point=({rep.witness_point.q.index},{rep.witness_point.p.index})")
    for w in out.witnesses:
        print(f"  witness net={w.ray_choices} point=({w.point.q.index},{w.point.p.index}) "
              f"value={w.value:.9f}")
    if args.brute_force:
        brute = brute_force_min(state, mub, gf)
        gap = abs(brute - rep.min_wigner)
        print(f"brute_force_min: {brute:.12f} (gap {gap:.2e})")
        if gap > 1e-12:
            print("error: brute force disagrees with the closed form", file=sys.stderr)
            return 1
    if args.decompose:
        result = convex_decomposition(state, mub)
        payload = {
            "x": result.x_total,
            "coefficients": [[float(c) for c in row] for row in result.coefficients],
            "certified_classical": bool(result.certified_classical),
        }
        write_json(args.decompose, payload, d, cfg.seed)
        print(f"wrote {args.decompose}")
    return 0


def _cmd_clifford(cfg: RunConfig) -> int:
    args = cfg.args
    chosen = [bool(args.check), args.no_flow_scan, args.squeeze]
    if sum(chosen) != 1:
        print("error: pick exactly one of --check, --no-flow-scan, --squeeze",
              file=sys.stderr)
        return 2
    if args.check:
        u = unitary_from_payload(read_json(args.check))
        d = u.shape[0]
        if d not in SUPPORTED_DIMENSIONS:
            raise FormatError(f"field 'dim': {d} is not a supported dimension")
        try:
            result = is_clifford(u, field(d))
        except ValueError as exc:
            raise FormatError(f"field 'matrix': {exc}") from exc
        if result:
            print("clifford: yes")
            print("symplectic table (columns X_1..X_n, Z_1..Z_n):")
            for row in result.symplectic:
                print("  " + " ".join(str(x) for x in row))
            print(f"phase exponents: {result.phase_exponents}")
            return 0
        print("clifford: no")
        print(f"witness generator: {result.witness} (overlap deficit {result.deficit:.3e})")
        return 1
    if args.d is None:
        print("error: --no-flow-scan and --squeeze require --d", file=sys.stderr)
        return 2
    d = args.d
    gf = field(d)
    if args.no_flow_scan:
        if gf.p != 2:
            print("error: the Fourier scan needs characteristic 2", file=sys.stderr)
            return 2
        fop = fourier_operator(gf).dense
        fix_axes = d > 2
        nets = list(enumerate_nets(gf, fix_axes=fix_axes))
        flows = sum(1 for net in nets if is_flow(fop, net))
        family = "fixed-axes" if fix_axes else "all"
        print(f"Fourier flow scan at d={d}: {flows} flows among {len(nets)} {family} nets")
        return 0
    try:
        us = squeezing_operator(gf)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"squeezing operator synthesized for d={d}")
    print("symplectic table (columns X_1..X_n, Z_1..Z_n):")
    for row in us.symplectic:
        print("  " + " ".join(str(x) for x in row))
    print(f"phase exponents: {us.phase_exponents}")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    results = run_verification(cfg.args.d, seed=cfg.seed)
    width = max(len(f"{r.group}: {r.name}") for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += 0 if r.passed else 1
        print(f"{status}  {f'{r.group}: {r.name}':{width}s}  {r.seconds:6.2f}s  {r.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed at d={cfg.args.d}")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "field": _cmd_field,
    "geometry": _cmd_geometry,
    "pauli": _cmd_pauli,
    "mub": _cmd_mub,
    "nets": _cmd_nets,
    "wigner": _cmd_wigner,
    "classicality": _cmd_classicality,
    "clifford": _cmd_clifford,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.subcommand, getattr(args, "d", None), args.seed, args)
    try:
        return _COMMANDS[args.subcommand](cfg)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
