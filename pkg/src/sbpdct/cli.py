"""Command-line entry point: ``sbpdct <command> [options]``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2
for usage, input or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from sbpdct import image2d
from sbpdct.metrics import complexity_report, measure_ops, render_csv, render_table, run_algorithm
from sbpdct.rivals import AlgorithmId
from sbpdct.sbp import NotNullMeanError, Scenario
from sbpdct.verify import run_verification

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def fmt(v: float) -> str:
    return f"{float(v):.12g}"


def read_signal(path: str) -> np.ndarray:
    """One sample per line; blank lines and ``#`` comments are skipped."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read signal file {path}: {exc.strerror}") from exc
    except UnicodeDecodeError:
        raise CliError(f"malformed signal file {path}: not a text file") from None
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise CliError(f"malformed signal file {path}: line {lineno}: {raw.strip()!r} is not a number") from None
    return np.array(values)


def _algorithm(text: str) -> AlgorithmId:
    try:
        return AlgorithmId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _scenario(text: str) -> Scenario:
    try:
        return Scenario.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbpdct", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def algo_opts(p, scenario=True):
        p.add_argument("--algorithm", type=_algorithm, default=AlgorithmId.PROPOSED,
                       help="naive|proposed|loeffler|arai (default: proposed)")
        if scenario:
            p.add_argument("--scenario", type=_scenario, default=Scenario.ARBITRARY,
                           help="arbitrary|null-mean|accumulated|null-mean-accumulated or i..iv")
        p.add_argument("--scaled", action="store_true", help="stop before the scaling stage")

    p = sub.add_parser("transform", help="8-point transform of a signal file")
    algo_opts(p)
    p.add_argument("--in", dest="input", required=True, help="signal file, one sample per line ('-' for stdin)")

    p = sub.add_parser("transform2d", help="blockwise 2-D transform of a PGM image")
    algo_opts(p, scenario=False)
    p.add_argument("--in", dest="input", required=True, help="binary PGM (P5)")
    p.add_argument("--out", dest="output", help="coefficient CSV (default: stdout)")

    p = sub.add_parser("verify", help="run the seeded self-check suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000, help="random trials per scenario check")

    p = sub.add_parser("opcount", help="measured operation counts for one configuration")
    algo_opts(p)

    p = sub.add_parser("table", help="comparison table of measured and cited counts")
    p.add_argument("--csv", dest="csv_path", help="also write the table as CSV to this path")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("demo-compress", help="quantise and reconstruct an image")
    p.add_argument("--algorithm", type=_algorithm, default=AlgorithmId.PROPOSED)
    p.add_argument("--in", dest="input", help="binary PGM; a seeded synthetic image when omitted")
    p.add_argument("--out", dest="output", help="write the reconstruction as PGM")
    p.add_argument("--qscale", type=float, default=1.0, help="multiplier on the luminance table")
    p.add_argument("--seed", type=int, default=42)
    return parser


def cmd_transform(args) -> int:
    x = read_signal(args.input)
    if len(x) != 8:
        raise CliError(f"8-point transform needs 8 samples, {args.input} has {len(x)}")
    spectrum = run_algorithm(args.algorithm, x, args.scenario, scaled=args.scaled)
    if spectrum.scaled:
        for v, s in zip(spectrum.values, spectrum.scale):
            print(f"{fmt(v)} {fmt(s)}")
    else:
        for v in spectrum.values:
            print(fmt(v))
    return EXIT_OK


def cmd_transform2d(args) -> int:
    img = image2d.read_pgm(args.input)
    padded = image2d.pad_to_blocks(img.astype(float)) - image2d.LEVEL_SHIFT
    nby, nbx = padded.shape[0] // 8, padded.shape[1] // 8
    blocks = np.empty((nby, nbx, 8, 8))
    scale = np.ones((8, 8))
    for by in range(nby):
        for bx in range(nbx):
            blk = padded[by * 8:by * 8 + 8, bx * 8:bx * 8 + 8]
            blocks[by, bx], scale = image2d.dct2_block(blk, args.algorithm, scaled=args.scaled)
    text = image2d.coefficients_csv(blocks)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc.strerror}") from exc
        print(f"blocks={nby * nbx} rows={nby} cols={nbx}")
        if args.scaled:
            print("scale:")
            for row in scale:
                print(",".join(fmt(v) for v in row))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_verification(seed=args.seed, trials=args.trials)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"summary: {len(results) - failed} passed, {failed} failed (seed={args.seed})")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_opcount(args) -> int:
    try:
        t = measure_ops(args.algorithm, args.scenario, scaled=args.scaled)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(f"mults={t.nontrivial_mults} adds={t.additions}")
    return EXIT_OK


def cmd_table(args) -> int:
    rows = complexity_report()
    sys.stdout.write(render_csv(rows) if args.format == "csv" else render_table(rows))
    if args.csv_path:
        try:
            Path(args.csv_path).write_text(render_csv(rows))
        except OSError as exc:
            raise CliError(f"cannot write {args.csv_path}: {exc.strerror}") from exc
    return EXIT_OK


def synthetic_image(seed: int, size: int = 64) -> np.ndarray:
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size]
    base = 128 + 60 * np.sin(xx / 9.0) * np.cos(yy / 13.0) + 0.8 * (xx - yy)
    return np.clip(base + rng.normal(0, 6, size=(size, size)), 0, 255).round().astype(np.uint8)


def cmd_demo(args) -> int:
    if args.qscale <= 0:
        raise CliError("--qscale must be positive")
    img = image2d.read_pgm(args.input) if args.input else synthetic_image(args.seed)
    q = np.maximum(1.0, image2d.JPEG_LUMA * args.qscale)
    lossless = image2d.transform_image(img, args.algorithm)
    lossy = image2d.transform_image(img, args.algorithm, q)
    nonzero = int(np.count_nonzero(lossy.quantized))
    print(f"image={img.shape[1]}x{img.shape[0]} algorithm={args.algorithm.value}")
    print(f"roundtrip_psnr_db={fmt(lossless.psnr)}")
    print(f"quantized_psnr_db={fmt(lossy.psnr)} nonzero_coeffs={nonzero}/{lossy.quantized.size}")
    if args.output:
        try:
            image2d.write_pgm(args.output, lossy.reconstruction_u8())
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc}") from exc
    return EXIT_OK


COMMANDS = {
    "transform": cmd_transform,
    "transform2d": cmd_transform2d,
    "verify": cmd_verify,
    "opcount": cmd_opcount,
    "table": cmd_table,
    "demo-compress": cmd_demo,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except NotNullMeanError as exc:
        print(f"error: scenario/input mismatch: {exc}", file=sys.stderr)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
