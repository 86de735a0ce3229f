"""Command-line surface: analyze a state file, tabulate the noisy chain,
or fuzz the closed forms against the Jacobi oracle.

Exit codes: 0 success, 1 input parse error, 2 validation error (bad matrix
or bad parameter ranges), 3 tolerance breach during fuzzing.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .bloch import from_bloch, partial_transpose, to_bloch, validate_density_matrix
from .chain import chain_report, max_transfer_distance
from .entanglement import concurrence, concurrence_pure, entanglement_report
from .linalg import eig_hermitian_oracle
from .sampling import (
    ginibre_density,
    haar_pure,
    pure_density,
    random_hermitian_trace_one,
    rank_deficient_density,
    werner_state,
)
from .separability import TAU_SEP, peres_test, pure_pt_spectrum, pure_separable, pt_coeffs
from .spectrum import coeffs_from_bloch, coeffs_from_traces, quartic_eigs

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_TOLERANCE = 3


class _ParseFailure(Exception):
    pass


class _ValidationFailure(Exception):
    pass


def _complex_entry(x):
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    raise _ParseFailure(f"expected a number or an [re, im] pair, got {x!r}")


def _load_state_file(path: str) -> np.ndarray:
    """Read a {"matrix": ...} / {"bloch": ...} / {"pure": ...} JSON file
    and return the density matrix it describes."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _ParseFailure(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _ParseFailure(f"{path} is not valid JSON: {exc}") from exc

    if not isinstance(doc, dict):
        raise _ParseFailure("top-level JSON value must be an object")
    keys = [k for k in ("matrix", "bloch", "pure") if k in doc]
    if len(keys) != 1:
        raise _ParseFailure(
            'exactly one of "matrix", "bloch", "pure" must be present, '
            f"found {keys or 'none'}"
        )
    kind = keys[0]
    data = doc[kind]

    if kind == "matrix":
        if not (isinstance(data, list) and len(data) == 4):
            raise _ParseFailure('"matrix" must be a 4x4 array')
        rows = []
        for row in data:
            if not (isinstance(row, list) and len(row) == 4):
                raise _ParseFailure('"matrix" must be a 4x4 array')
            rows.append([_complex_entry(x) for x in row])
        rho = np.array(rows, dtype=complex)
    elif kind == "bloch":
        try:
            t = np.array(data, dtype=float)
        except (TypeError, ValueError) as exc:
            raise _ParseFailure(f'"bloch" must be a 4x4 real array: {exc}') from exc
        if t.shape != (4, 4):
            raise _ParseFailure('"bloch" must be a 4x4 real array')
        try:
            rho = from_bloch(t)
        except ValueError as exc:
            raise _ValidationFailure(str(exc)) from exc
    else:
        if not (isinstance(data, list) and len(data) == 4):
            raise _ParseFailure('"pure" must be a length-4 array')
        v = np.array([_complex_entry(x) for x in data])
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > 1e-10:
            raise _ValidationFailure(
                f"pure state norm is {norm!r}, not 1 within 1e-10"
            )
        rho = pure_density(v)

    try:
        validate_density_matrix(rho)
    except ValueError as exc:
        raise _ValidationFailure(str(exc)) from exc
    return rho


def _analysis_dict(rho: np.ndarray) -> dict:
    t = to_bloch(rho)
    c = coeffs_from_traces(rho)
    spec = quartic_eigs(c)
    pt_spec = quartic_eigs(pt_coeffs(c, t))
    sep = peres_test(rho, check=False)
    ent = entanglement_report(rho, check=False)
    return {
        "eigenvalues": [float(x) for x in spec.eigenvalues],
        "branch": spec.branch.value,
        "bloch": [[float(x) for x in row] for row in t],
        "purity": float(c.tr2),
        "pt_eigenvalues": [float(x) for x in pt_spec.eigenvalues],
        "separable": sep.separable,
        "marginal": sep.marginal,
        "concurrence": float(ent.concurrence),
        "eof": float(ent.eof),
        "negativity": float(ent.negativity),
        "eof_upper_bound": None
        if ent.eof_upper_bound is None
        else float(ent.eof_upper_bound),
    }


def _print_analysis(out: dict) -> None:
    eigs = " ".join(repr(x) for x in out["eigenvalues"])
    pt = " ".join(repr(x) for x in out["pt_eigenvalues"])
    print(f"eigenvalues: {eigs}")
    print(f"branch: {out['branch']}")
    print(f"purity: {out['purity']!r}")
    print(f"pt eigenvalues: {pt}")
    verdict = "yes" if out["separable"] else "no"
    if out["marginal"]:
        verdict += " (marginal)"
    print(f"separable: {verdict}")
    print(f"concurrence: {out['concurrence']!r}")
    print(f"eof: {out['eof']!r}")
    print(f"negativity: {out['negativity']!r}")
    bound = out["eof_upper_bound"]
    print(f"eof upper bound: {'n/a' if bound is None else repr(bound)}")


def cmd_analyze(args) -> int:
    rho = _load_state_file(args.file)
    out = _analysis_dict(rho)
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        _print_analysis(out)
    return EXIT_OK


def _parse_sweep(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise _ValidationFailure("--sweep expects start:stop:step")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise _ValidationFailure(f"--sweep values must be numbers: {exc}") from exc
    if step <= 0 or stop < start:
        raise _ValidationFailure("--sweep needs step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def cmd_chain(args) -> int:
    if not 0.0 <= args.q <= 0.5:
        raise _ValidationFailure(f"--q must lie in [0, 1/2], got {args.q}")

    if args.sweep is not None:
        if args.n is not None:
            raise _ValidationFailure("--n only applies with --epsilon")
        rows = []
        for eps in _parse_sweep(args.sweep):
            if not 0.0 <= eps <= 1.0:
                raise _ValidationFailure(f"sweep epsilon {eps} outside [0, 1]")
            n_max = max_transfer_distance(args.q, eps)
            rows.append((eps, n_max))
        if args.csv:
            print("epsilon,n_max")
            for eps, n_max in rows:
                cell = "inf" if n_max is math.inf else str(int(n_max))
                print(f"{eps!r},{cell}")
        else:
            doc = [
                {"epsilon": eps, "n_max": None if n_max is math.inf else int(n_max)}
                for eps, n_max in rows
            ]
            print(json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_OK

    eps = args.epsilon
    if not 0.0 <= eps <= 1.0:
        raise _ValidationFailure(f"--epsilon must lie in [0, 1], got {eps}")
    try:
        report = chain_report(args.q, eps, n=args.n)
    except ValueError as exc:
        raise _ValidationFailure(str(exc)) from exc

    entangled = [lam < -TAU_SEP for lam in report.lambda_min_per_step]
    if args.csv:
        print("n,lambda_min,entangled")
        for k, (lam, ent) in enumerate(zip(report.lambda_min_per_step, entangled)):
            print(f"{k},{lam!r},{str(ent).lower()}")
    else:
        doc = {
            "q": args.q,
            "epsilon": eps,
            "n_max": None if report.n_max is math.inf else int(report.n_max),
            "epsilon_critical": report.epsilon_critical,
            "rows": [
                {"n": k, "lambda_min": lam, "entangled": ent}
                for k, (lam, ent) in enumerate(
                    zip(report.lambda_min_per_step, entangled)
                )
            ],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def _matrix_json(m: np.ndarray):
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.asarray(m, dtype=complex)]


class _FuzzTally:
    """Running maxima per check plus capped counterexample dumps."""

    _DUMP_CAP = 3

    def __init__(self):
        self.max_error = {}
        self.breaches = 0
        self.dumps = []

    def record(self, check: str, error: float, tol: float, index: int, payload):
        prev = self.max_error.get(check, 0.0)
        if error > prev:
            self.max_error[check] = error
        if error > tol:
            self.breaches += 1
            if len(self.dumps) < self._DUMP_CAP:
                self.dumps.append(
                    {
                        "check": check,
                        "error": float(error),
                        "tolerance": tol,
                        "index": index,
                        "input": payload,
                    }
                )


def _fuzz_density_checks(rho, idx, tally: _FuzzTally):
    """Eigenvalue fidelity, coefficient route agreement, and verdict
    equivalence for one density matrix."""
    payload = None

    def dump():
        nonlocal payload
        if payload is None:
            payload = _matrix_json(rho)
        return payload

    closed = quartic_eigs(coeffs_from_traces(rho)).eigenvalues
    oracle = eig_hermitian_oracle(rho)
    err = max(abs(a - b) for a, b in zip(closed, oracle))
    tally.record("eigenvalues_vs_oracle", err, 1e-9, idx, dump() if err > 1e-9 else None)

    t = to_bloch(rho)
    ca = coeffs_from_traces(rho)
    cb = coeffs_from_bloch(t)
    err = max(
        abs(ca.b0 - cb.b0), abs(ca.b1 - cb.b1), abs(ca.b2 - cb.b2), abs(ca.tr2 - cb.tr2)
    )
    tally.record("bloch_vs_flv_coeffs", err, 1e-10, idx, dump() if err > 1e-10 else None)

    sep = peres_test(rho, check=False)
    pt_oracle_min = eig_hermitian_oracle(partial_transpose(rho))[-1]
    lam_err = abs(sep.lambda_min_pt - pt_oracle_min)
    tally.record(
        "pt_lambda_min_vs_oracle", lam_err, 1e-9, idx, dump() if lam_err > 1e-9 else None
    )
    if abs(pt_oracle_min) > TAU_SEP and abs(sep.lambda_min_pt) > TAU_SEP:
        agree = sep.separable == (pt_oracle_min >= 0.0)
        tally.record(
            "verdict_vs_oracle_sign", 0.0 if agree else 1.0, 0.5, idx,
            dump() if not agree else None,
        )
    if abs(sep.lambda_min_pt) > 1e-8:
        c = concurrence(rho, check=False)
        agree = (c > TAU_SEP) == (not sep.separable)
        tally.record(
            "concurrence_vs_verdict", 0.0 if agree else 1.0, 0.5, idx,
            dump() if not agree else None,
        )


def _fuzz_one(family: str, rng: np.random.Generator, idx: int, tally: _FuzzTally):
    if family == "ginibre":
        _fuzz_density_checks(ginibre_density(rng), idx, tally)
    elif family == "hermitian":
        h = random_hermitian_trace_one(rng)
        closed = quartic_eigs(coeffs_from_traces(h)).eigenvalues
        oracle = eig_hermitian_oracle(h)
        err = max(abs(a - b) for a, b in zip(closed, oracle))
        tally.record(
            "eigenvalues_vs_oracle", err, 1e-9, idx,
            _matrix_json(h) if err > 1e-9 else None,
        )
        ca = coeffs_from_traces(h)
        cb = coeffs_from_bloch(to_bloch(h))
        err = max(
            abs(ca.b0 - cb.b0), abs(ca.b1 - cb.b1),
            abs(ca.b2 - cb.b2), abs(ca.tr2 - cb.tr2),
        )
        tally.record(
            "bloch_vs_flv_coeffs", err, 1e-10, idx,
            _matrix_json(h) if err > 1e-10 else None,
        )
    elif family == "pure":
        v = haar_pure(rng)
        rho = pure_density(v)
        state_json = [[float(x.real), float(x.imag)] for x in v]
        closed = pure_pt_spectrum(v)
        oracle = eig_hermitian_oracle(partial_transpose(rho))
        err = max(abs(a - b) for a, b in zip(closed, oracle))
        tally.record(
            "pure_pt_vs_oracle", err, 1e-12, idx, state_json if err > 1e-12 else None
        )
        err = abs(concurrence(rho, check=False) - concurrence_pure(v))
        tally.record(
            "pure_concurrence_bridge", err, 1e-10, idx,
            state_json if err > 1e-10 else None,
        )
        agree = pure_separable(v) == peres_test(rho, check=False).separable
        tally.record(
            "pure_verdict_agreement", 0.0 if agree else 1.0, 0.5, idx,
            state_json if not agree else None,
        )
    elif family in ("rank2", "rank3"):
        rho = rank_deficient_density(rng, 2 if family == "rank2" else 3)
        _fuzz_density_checks(rho, idx, tally)
    elif family == "werner":
        p = rng.uniform(-1.0 / 3.0, 1.0)
        rho = werner_state(p)
        _fuzz_density_checks(rho, idx, tally)
        c = concurrence(rho, check=False)
        err = abs(c - max(0.0, (3.0 * p - 1.0) / 2.0))
        tally.record(
            "werner_concurrence_formula", err, 1e-10, idx,
            [p] if err > 1e-10 else None,
        )
    else:
        raise _ValidationFailure(f"unknown family {family!r}")


def cmd_fuzz(args) -> int:
    if args.samples < 1:
        raise _ValidationFailure(f"--samples must be >= 1, got {args.samples}")
    rng = np.random.default_rng(args.seed)
    tally = _FuzzTally()
    for idx in range(args.samples):
        _fuzz_one(args.family, rng, idx, tally)
    summary = {
        "family": args.family,
        "samples": args.samples,
        "seed": args.seed,
        "max_error": {k: float(v) for k, v in sorted(tally.max_error.items())},
        "breaches": tally.breaches,
        "counterexamples": tally.dumps,
        "ok": tally.breaches == 0,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_OK if tally.breaches == 0 else EXIT_TOLERANCE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoqubit",
        description="Closed-form two-qubit spectra, separability, and the "
        "noisy entanglement-transfer chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "analyze",
        help="full report for a state file "
        '({"matrix": 4x4 [re,im]}, {"bloch": 4x4 reals}, or {"pure": 4 [re,im]})',
    )
    p.add_argument("file", help="path to the JSON state file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("chain", help="noisy-chain lambda_min table or epsilon sweep")
    p.add_argument("--q", type=float, required=True, help="initial |ad - bc|")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--epsilon", type=float, help="fixed noise strength")
    group.add_argument("--sweep", help="epsilon range start:stop:step")
    p.add_argument("--n", type=int, help="last step to tabulate (default n_max + 1)")
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("fuzz", help="randomized closed-form vs oracle comparison")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument(
        "--family",
        required=True,
        choices=["ginibre", "hermitian", "pure", "rank2", "rank3", "werner"],
    )
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
