"""
Command-line interface for pdrm

JSON goes to stdout, logs to stderr. Exit codes: 0 success, 1 decode (or
PD-like check) failure, 2 usage or domain error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from .codes import from_hex, to_hex
from .config import Config
from .decoder import DecoderConfig, PermutationDecoder
from .field import GaloisField, field_new
from .gf2 import to_text
from .infoset import GammaSet, select_full_order_factor, valid_factorizations
from .pdsets import pd_like_set, ranked_factorizations, verify_pd_like
from .simulation import SimConfig, run_sim
from .tables import render_columns, render_table1, render_table2, table1, table2

logger = logging.getLogger(__name__)

SCHEMA_HELP = """\
JSON outputs carry "schema": 1.
  info          {m, n, poly, r1, r2, a, lambda0, s, gamma, info_set, t_check, guarantee_limit}
  tables        {schema, table, rows: [...]}
  encode        {schema, m, codeword}
  decode        {schema, status, codeword, total_perm, phase_index, pd_exponent, perm_index, ...}
  simulate      {schema, m, r1, r2, s, seed, mode, records: [...]}
  verify-pdlike {schema, mode, m, s, checked, failures, holds, example_failure?}
  matrix        rows of 0/1 (text only)
"""


def parse_weights(text: str) -> tuple[int, ...]:
    """'1..13' or '1,2,5'"""
    text = text.strip()
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            if low > high:
                raise ValueError
            return tuple(range(low, high + 1))
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid weight list {text!r}") from e


def parse_poly(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid hex polynomial {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--debug", action="store_true", help="Enable debug logging")
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose logging (INFO messages)"
    )
    common.add_argument("--config", type=Path, help="Config file (default ~/.config/pdrm)")
    common.add_argument("--format", choices=("json", "text"), default="json")

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--m", type=int, required=True, help="Field degree, code length 2^m")
    code.add_argument("--r1", type=int, help="Full-order factor of 2^m - 1 (default: max s)")
    code.add_argument("--poly", type=parse_poly, help="Primitive polynomial as hex, e.g. 0x13")

    parser = argparse.ArgumentParser(
        prog="pdrm",
        description="Permutation decoding of first-order Reed-Muller codes",
        epilog=SCHEMA_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", parents=[common, code], help="Factorization and information set")
    info.add_argument("--all", action="store_true", help="List every factorization with its s")

    tables = sub.add_parser("tables", parents=[common], help="Regenerate the parameter tables")
    tables.add_argument("--which", type=int, choices=(1, 2), required=True)

    encode = sub.add_parser("encode", parents=[common, code], help="Encode m + 1 info bits")
    encode.add_argument("--info", required=True, help="Bits in sorted information-position order")

    decode = sub.add_parser("decode", parents=[common, code], help="Decode a hex word")
    decode.add_argument("--received", required=True, help="Hex word, MSB = position 0")
    decode.add_argument("--best-effort", action="store_true", help="Walk all translations")

    simulate = sub.add_parser("simulate", parents=[common, code], help="Decoding experiment")
    simulate.add_argument("--weights", type=parse_weights, required=True, help="1..13 or 1,2,3")
    simulate.add_argument("--trials", type=int, help="Trials per weight (sampled mode)")
    simulate.add_argument("--seed", type=int)
    simulate.add_argument("--mode", choices=("sampled", "exhaustive"), default="sampled")
    simulate.add_argument("--best-effort", action="store_true")
    simulate.add_argument("--workers", type=int)
    simulate.add_argument("--oracle", action="store_true", help="Compare with min-distance")
    simulate.add_argument("--output", type=Path, help="Also write the JSON report here")

    verify = sub.add_parser("verify-pdlike", parents=[common, code], help="Check <T_alpha>")
    verify.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    verify.add_argument("--trials", type=int, default=100_000)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--s", type=int, dest="s_override", help="Check s-subsets of this size")
    verify.add_argument("--workers", type=int)

    matrix = sub.add_parser("matrix", parents=[common, code], help="Print H, H_std or G")
    matrix.add_argument("--which", choices=("H", "Hstd", "G"), default="H")

    return parser


def _field(args, config: Config) -> GaloisField:
    poly = args.poly if args.poly is not None else config.get_primitive_poly(args.m)
    if args.m > config.get("field.max_m", 16):
        raise ValueError(f"m={args.m} exceeds field.max_m={config.get('field.max_m')}")
    return field_new(args.m, poly, allow_small_m=config.get("field.allow_small_m", False))


def _decoder(args, config: Config, best_effort: bool = False) -> PermutationDecoder:
    field = _field(args, config)
    fact = None if args.r1 is None else select_full_order_factor(args.m, args.r1)
    return PermutationDecoder(
        field,
        fact,
        best_effort=best_effort or config.get("decoder.best_effort", False),
        t_check=config.get("decoder.t_check"),
        max_m=config.get("matrix.max_m", 12),
    )


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "text":
        if text is None:
            text = "\n".join(f"{key}: {value}" for key, value in payload.items())
        print(text)
    else:
        print(json.dumps(payload, indent=2))


def cmd_info(args, config: Config) -> int:
    field = _field(args, config)
    pd = pd_like_set(field, select_full_order_factor(args.m, args.r1))
    fact = pd.factorization
    limits = DecoderConfig.for_code(field.m, pd.s, t_check=config.get("decoder.t_check"))
    payload = {
        "schema": 1,
        "m": field.m,
        "n": field.n,
        "poly": field.spec.poly_display(),
        **fact.as_dict(),
        "lambda0": pd.lambda0,
        "s": pd.s,
        "gamma": sorted(GammaSet.build(fact.a, field.m).pairs),
        "info_set": pd.info_set.as_dict(),
        "t_check": limits.t_check,
        "guarantee_limit": limits.guarantee_limit,
    }
    if args.all:
        payload["factorizations"] = [
            {**f.as_dict(), "full_order": f.is_full_order(args.m)}
            for f in valid_factorizations(args.m)
        ]
        payload["ranked"] = [{**f.as_dict(), "s": s} for f, s in ranked_factorizations(args.m)]
    _emit(args, payload)
    return 0


def cmd_tables(args, config: Config) -> int:
    if args.which == 1:
        rows = table1()
        text = render_table1(rows)
    else:
        rows = table2()
        text = render_table2(rows)
    payload = {"schema": 1, "table": args.which, "rows": [row.as_dict() for row in rows]}
    _emit(args, payload, text)
    return 0


def cmd_encode(args, config: Config) -> int:
    bits = [int(c) for c in args.info.strip() if c in "01"]
    if len(bits) != len(args.info.strip()):
        raise ValueError(f"Information bits must be 0/1 characters, got {args.info!r}")
    decoder = _decoder(args, config)
    word = decoder.encode(bits)
    _emit(args, {"schema": 1, "m": args.m, "codeword": to_hex(word)}, to_hex(word))
    return 0


def cmd_decode(args, config: Config) -> int:
    decoder = _decoder(args, config, best_effort=args.best_effort)
    received = from_hex(args.received, decoder.field.size)
    result = decoder.decode(received)
    _emit(args, result.as_dict())
    return 0 if result.ok else 1


def cmd_simulate(args, config: Config) -> int:
    best_effort = args.best_effort or config.get("decoder.best_effort", False)
    decoder = _decoder(args, config, best_effort=best_effort)
    cfg = SimConfig(
        m=args.m,
        weights=args.weights,
        trials_per_weight=(
            config.get("simulation.trials", 1000) if args.trials is None else args.trials
        ),
        seed=config.get("simulation.seed", 0) if args.seed is None else args.seed,
        mode=args.mode,
        best_effort=best_effort,
        r1=args.r1,
        workers=config.get("simulation.workers", 1) if args.workers is None else args.workers,
        exhaustive_budget=config.get("simulation.exhaustive_budget", 10_000_000),
        compare_oracle=args.oracle,
        oracle_max_m=config.get("oracle.max_m", 8),
    )
    report = run_sim(cfg, decoder)
    payload = report.as_dict()
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_text(json.dumps(payload, indent=2) + "\n")
        logger.info(f"Wrote report to {args.output}")

    headers = ["w", "trials", "ok", "fail", "miscorr", "phases", "max", "checks"]
    body = [
        [
            str(rec.weight),
            str(rec.trials),
            str(rec.successes),
            str(rec.failures_detected),
            str(rec.miscorrections),
            f"{rec.phases_total / max(rec.trials, 1):.3f}",
            str(rec.phases_max),
            f"{rec.checks_total / max(rec.trials, 1):.1f}",
        ]
        for rec in report.records
    ]
    _emit(args, payload, render_columns(headers, body))
    return 0


def cmd_verify_pdlike(args, config: Config) -> int:
    field = _field(args, config)
    pd = pd_like_set(field, select_full_order_factor(args.m, args.r1))
    if args.s_override is not None:
        pd = pd.with_s(args.s_override)
    report = verify_pd_like(
        pd,
        mode=args.mode,
        trials=args.trials,
        seed=config.get("simulation.seed", 0) if args.seed is None else args.seed,
        budget=config.get("pd_like.exhaustive_budget", 10_000_000),
        workers=config.get("simulation.workers", 1) if args.workers is None else args.workers,
    )
    _emit(args, report.as_dict())
    return 0 if report.holds else 1


def cmd_matrix(args, config: Config) -> int:
    decoder = _decoder(args, config)
    if args.which == "H":
        matrix = decoder.code.parity_check
    elif args.which == "Hstd":
        matrix = decoder.std.h_std
    else:
        matrix = decoder.code.generator
    print(to_text(matrix))
    return 0


COMMANDS = {
    "info": cmd_info,
    "tables": cmd_tables,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "verify-pdlike": cmd_verify_pdlike,
    "matrix": cmd_matrix,
}


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    # Configure logging based on flags
    log_level = logging.WARNING  # Default: quiet
    if args.debug:
        log_level = logging.DEBUG
    elif args.verbose:
        log_level = logging.INFO

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger("pdrm").setLevel(log_level)

    try:
        config = Config(args.config)
        return COMMANDS[args.command](args, config)
    except ValueError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"pdrm {args.command}: error: {e}", file=sys.stderr)
        return 2


def main() -> int:
    """Entry point"""
    return cli_dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
