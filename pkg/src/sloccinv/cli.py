"""Command-line interface.

Commands: invariants, charpoly, compare, selftest, random.  Exit codes are a
stable contract: 0 success (or indistinguishable), 1 inequivalent verdict or
failed self-test, 2 input error, 3 partial support (state parsed but no
closed forms for its qubit count; the generic fingerprint is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from ._backend import BACKEND
from .equivalence import INEQUIVALENT, compare_projective, compare_strict, fingerprint
from .invariants import invariant_set, relation_residuals
from .partition import PartitionError, parse_partition
from .charpoly import char_poly
from .fmatrix import build_f
from .sampler import SeededGenerator, random_state
from .selftest import run_selftest
from .state import StateFormatError, parse_state, serialize_state, state_norm

EXIT_OK = 0
EXIT_DIFFER = 1
EXIT_INPUT = 2
EXIT_PARTIAL = 3


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _json_complex(z: complex) -> list[float]:
    return [z.real, z.imag]


def _parse_seed(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed {text!r} is not a decimal or 0x-hex integer")
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return seed


def _positive_int(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if val < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return val


def _positive_float(text: str) -> float:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number")
    if val <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return val


def _load_state(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_state(fh.read())
    except OSError as exc:
        raise StateFormatError(f"cannot read {path}: {exc}") from None


def _emit(payload: dict, as_json: bool, lines: list[str]):
    if as_json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _fingerprint_lines(state) -> tuple[list[str], list[dict]]:
    lines = []
    records = []
    for label, poly in fingerprint(state).entries.items():
        coeffs = poly.coeffs.tolist()
        lines.append(
            f"charpoly {label}: [" + ", ".join(_fmt_complex(z) for z in coeffs) + "]"
        )
        records.append({"partition": label, "coefficients": [_json_complex(z) for z in coeffs]})
    return lines, records


def cmd_invariants(args) -> int:
    state = _load_state(args.file)
    fp_lines, fp_records = _fingerprint_lines(state)
    if state.n not in (3, 4):
        payload = {
            "command": "invariants",
            "file": args.file,
            "n": state.n,
            "supported": False,
            "fingerprint": fp_records,
        }
        lines = [f"n={state.n}: no closed-form invariants; fingerprint only"] + fp_lines
        _emit(payload, args.json, lines)
        return EXIT_PARTIAL

    inv = invariant_set(state)
    residuals = relation_residuals(state)
    lines = [f"n={state.n} state, norm={state_norm(state):.17g}"]
    inv_json = {}
    for key, label in (
        ("f1_3", "F1_3"),
        ("tangle3", "tangle"),
        ("h", "H"),
        ("l", "L"),
        ("m_inv", "M"),
        ("dxt", "D_xt"),
        ("dxt_printed", "D_xt_printed"),
    ):
        val = getattr(inv, key)
        if val is None:
            continue
        if isinstance(val, float):
            lines.append(f"{label:13s}= {val:.17g}")
            inv_json[key] = val
        else:
            lines.append(f"{label:13s}= {_fmt_complex(val)}")
            inv_json[key] = _json_complex(val)
    lines.append("relation residuals (scaled absolute deviations):")
    for name, val in residuals.as_dict().items():
        lines.append(f"  {name:8s} {val:.3e}")
    payload = {
        "command": "invariants",
        "file": args.file,
        "n": state.n,
        "supported": True,
        "norm": state_norm(state),
        "invariants": inv_json,
        "residuals": residuals.as_dict(),
        "fingerprint": fp_records,
    }
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    state = _load_state(args.file)
    if args.partition is not None:
        parts = [parse_partition(args.partition, state.n)]
        records = []
        lines = []
        for part in parts:
            coeffs = char_poly(build_f(state, part)).coeffs.tolist()
            lines.append(
                f"charpoly {part.label}: [" + ", ".join(_fmt_complex(z) for z in coeffs) + "]"
            )
            records.append(
                {"partition": part.label, "coefficients": [_json_complex(z) for z in coeffs]}
            )
    else:
        lines, records = _fingerprint_lines(state)
    payload = {
        "command": "charpoly",
        "file": args.file,
        "n": state.n,
        "polynomials": records,
    }
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_compare(args) -> int:
    state_a = _load_state(args.file_a)
    state_b = _load_state(args.file_b)
    if state_a.n != state_b.n:
        raise StateFormatError(
            f"states have different qubit counts: {state_a.n} vs {state_b.n}"
        )
    fp_a, fp_b = fingerprint(state_a), fingerprint(state_b)
    if args.projective:
        verdict = compare_projective(fp_a, fp_b, tol=args.tol)
    else:
        verdict = compare_strict(fp_a, fp_b, tol=args.tol)
    lines = [f"verdict: {verdict.outcome} ({verdict.mode} mode, tol={args.tol:g})"]
    witness_json = None
    if verdict.witness is not None:
        w = verdict.witness
        lines.append(f"witness: partition {w.partition}, coefficient {w.coeff_index} ({w.detail})")
        witness_json = {
            "partition": w.partition,
            "coeff_index": w.coeff_index,
            "detail": w.detail,
        }
    payload = {
        "command": "compare",
        "files": [args.file_a, args.file_b],
        "mode": verdict.mode,
        "tol": args.tol,
        "verdict": verdict.outcome,
        "witness": witness_json,
    }
    _emit(payload, args.json, lines)
    return EXIT_DIFFER if verdict.outcome == INEQUIVALENT else EXIT_OK


def cmd_selftest(args) -> int:
    report = run_selftest(args.qubits, args.trials, args.seed, tol_override=args.tol)
    lines = [f"self-test: qubits={report.qubits} trials={report.trials} seed={report.seed}"]
    for res in report.results:
        flag = "pass" if res.passed else "FAIL"
        lines.append(
            f"  {res.name:20s} max residual {res.max_residual:.3e}  tol {res.tol:.1e}  {flag}"
        )
    for note in report.notes:
        lines.append(f"  note: {note}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    _emit({"command": "selftest", **report.as_dict()}, args.json, lines)
    return EXIT_OK if report.passed else EXIT_DIFFER


def cmd_random(args) -> int:
    if not 1 <= args.qubits <= 10:
        print("error: --qubits must be in 1..10", file=sys.stderr)
        return EXIT_INPUT
    state = random_state(args.qubits, SeededGenerator(args.seed))
    text = serialize_state(state) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sloccinv",
        description="SLOCC invariants of n-qubit pure states from square-matrix "
        "characteristic polynomials",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="closed-form invariants and identity residuals")
    p_inv.add_argument("file", help="state file (JSON)")
    p_inv.add_argument("--json", action="store_true", help="machine-readable output")
    p_inv.set_defaults(func=cmd_invariants)

    p_cp = sub.add_parser("charpoly", help="fingerprint characteristic polynomials")
    p_cp.add_argument("file", help="state file (JSON)")
    p_cp.add_argument(
        "--partition",
        help="bipartition like 12|34 (default: all canonical partitions)",
    )
    p_cp.add_argument("--json", action="store_true", help="machine-readable output")
    p_cp.set_defaults(func=cmd_charpoly)

    p_cmp = sub.add_parser("compare", help="SLOCC-inequivalence test of two states")
    p_cmp.add_argument("file_a", help="first state file")
    p_cmp.add_argument("file_b", help="second state file")
    p_cmp.add_argument("--tol", type=_positive_float, default=1e-9, help="comparison tolerance")
    p_cmp.add_argument(
        "--projective",
        action="store_true",
        help="compare modulo the rescaling induced by non-unimodular operators",
    )
    p_cmp.add_argument("--json", action="store_true", help="machine-readable output")
    p_cmp.set_defaults(func=cmd_compare)

    p_st = sub.add_parser("selftest", help="Monte Carlo identity suite")
    p_st.add_argument("--qubits", type=int, choices=(3, 4), required=True)
    p_st.add_argument("--trials", type=_positive_int, default=1000)
    p_st.add_argument("--seed", type=_parse_seed, default=42)
    p_st.add_argument("--tol", type=_positive_float, default=None, help="override every identity tolerance")
    p_st.add_argument("--json", action="store_true", help="machine-readable output")
    p_st.set_defaults(func=cmd_selftest)

    p_rnd = sub.add_parser("random", help="write a reproducible random unit-norm state")
    p_rnd.add_argument("--qubits", type=int, required=True)
    p_rnd.add_argument("--seed", type=_parse_seed, required=True)
    p_rnd.add_argument("-o", "--out", default=None, help="output path (default: stdout)")
    p_rnd.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StateFormatError, PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
