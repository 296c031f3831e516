"""Command-line front end.

Exit status is 0 on success, 2 on a usage error and 1 when an input fails
validation or a computation is out of domain. State files are read from
``--in`` and written to ``--out``; both default to the standard streams.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

import numpy as np

from . import channels, dynamics, observables, plot, xform
from .io import StateFile, dumps, load_state, real_file, save_state, superop_file
from .tensor_core import DomainError, choi_reshuffle


class UsageError(Exception):
    pass


def _floats(text: str, count: int | None = None) -> tuple[float, ...]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} comma-separated numbers, got {text!r}")
    return vals


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@contextmanager
def _reader(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


def _load(path: str, *, density: bool = True) -> StateFile:
    with _reader(path) as fh:
        return load_state(fh, density=density)


def _write_text(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_state(state: StateFile, path: str) -> None:
    _write_text(dumps(state) + "\n", path)


def _real_state(path: str) -> np.ndarray:
    """Load a density file and return it in the real domain."""
    state = _load(path)
    if state.kind == "real":
        return state.data
    if state.kind == "hermitian":
        return xform.to_real(state.data)
    raise DomainError(f"expected a hermitian or real state file, got kind {state.kind!r}")


def _expect_qubits(sigma: np.ndarray, n: int, what: str) -> None:
    if sigma.shape[0] != 2**n:
        raise DomainError(f"{what} needs a {n}-qubit state, got {sigma.shape[0]}x{sigma.shape[0]}")


# --- subcommands ------------------------------------------------------------


def cmd_transform(args) -> None:
    state = _load(args.inp)
    if state.kind == "superop":
        if args.to == "real":
            out = xform.superop_to_real(xform.Superop(state.data, state.domain))
        else:
            out = xform.superop_to_hermitian(xform.Superop(state.data, state.domain))
        _write_state(superop_file(out.mat), args.out)
        return
    if args.to == "real":
        if state.kind != "hermitian":
            raise DomainError(f"--to real needs a hermitian state, got kind {state.kind!r}")
        _write_state(real_file(xform.to_real(state.data)), args.out)
    else:
        if state.kind != "real":
            raise DomainError(f"--to hermitian needs a real state, got kind {state.kind!r}")
        rho = xform.to_hermitian(state.data)
        _write_state(StateFile("hermitian", state.qubits, rho), args.out)


def cmd_evolve(args) -> None:
    sigma = _real_state(args.inp)
    if args.biaxial:
        if args.in2 is None or args.nu1 is None or args.nu2 is None or args.time is None:
            raise UsageError("--biaxial needs --in2, --nu1, --nu2 and --time")
        sigma2 = _real_state(args.in2)
        _expect_qubits(sigma, 1, "bi-axial evolution")
        _expect_qubits(sigma2, 1, "bi-axial evolution")
        nu1 = dynamics.RotationGenerator.from_vector(*_floats(args.nu1, 3))
        nu2 = dynamics.RotationGenerator.from_vector(*_floats(args.nu2, 3))
        out = dynamics.evolve_biaxial(sigma, sigma2, nu1, nu2, args.time)
    elif args.axis is not None:
        if args.angle is None:
            raise UsageError("--axis needs --angle")
        _expect_qubits(sigma, 1, "axis rotation")
        out = channels.apply_rotation(args.axis, args.angle, sigma)
    elif args.nu is not None:
        if args.time is None:
            raise UsageError("--nu needs --time")
        _expect_qubits(sigma, 1, "single-qubit evolution")
        out = dynamics.evolve_1q(sigma, dynamics.RotationGenerator.from_vector(*_floats(args.nu, 3)), args.time)
    else:
        raise UsageError("evolve needs --axis/--angle, --nu/--time or --biaxial")
    _write_state(real_file(out), args.out)


def cmd_ising(args) -> None:
    sigma = _real_state(args.inp)
    _expect_qubits(sigma, 2, "Ising coupling")
    _write_state(real_file(channels.ising_apply(sigma, args.J, args.time)), args.out)


def cmd_relax(args) -> None:
    sigma = _real_state(args.inp)
    t2 = _floats(args.T2)
    if args.correlated:
        if args.equilibrium is not None:
            raise UsageError("--equilibrium applies to uncorrelated relaxation only")
        spec = channels.RelaxationSpec(T1=_floats(args.T1) if args.T1 else (), T2=t2, correlated=True)
        _expect_qubits(sigma, 2, "correlated relaxation")
        out = channels.relax_correlated_2q(sigma, spec.T2[0], args.time)
    else:
        if args.T1 is None:
            raise UsageError("uncorrelated relaxation needs --T1")
        spec = channels.RelaxationSpec(T1=_floats(args.T1), T2=t2)
        eq = _real_state(args.equilibrium) if args.equilibrium else None
        out = channels.relax_uncorrelated(sigma, spec, args.time, equilibrium=eq)
    _write_state(real_file(out), args.out)


def _choi_of(state: StateFile) -> np.ndarray:
    if state.kind == "choi":
        return state.data
    if state.kind != "superop":
        raise DomainError(f"expected a superop or choi file, got kind {state.kind!r}")
    if state.domain == "real":
        return xform.real_superop_to_choi_pauli(xform.Superop(state.data, "real"))
    return choi_reshuffle(state.data)


def _cplx(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def cmd_choi(args) -> None:
    choi = _choi_of(_load(args.inp))
    if not args.opsum:
        _write_state(superop_file(choi, "choi"), args.out)
        return
    ops = xform.opsum_from_choi(choi)
    terms = [
        {
            "coefficient": _cplx(c),
            "left": [[_cplx(z) for z in row] for row in a],
            "right": [[_cplx(z) for z in row] for row in b],
        }
        for c, a, b in ops.terms
    ]
    _write_text(json.dumps({"terms": terms}, separators=(",", ":")) + "\n", args.out)


def cmd_plot(args) -> None:
    sigma = _real_state(args.inp)
    if args.format == "svg":
        _write_text(plot.render_bars(sigma, title=args.title) + "\n", args.out)
    else:
        _write_text(plot.render_csv(sigma), args.out)


def cmd_expect(args) -> None:
    obs = _load(args.observable, density=False)
    sigma = _real_state(args.inp)
    if obs.kind == "hermitian":
        value = observables.expect(observables.ObservablePair(obs.data), sigma)
    elif obs.kind == "real":
        if obs.data.shape != sigma.shape:
            raise DomainError("observable and state sizes differ")
        value = float(np.sum(obs.data * sigma)) / sigma.shape[0]
    else:
        raise DomainError(f"observable file must be hermitian or real, got kind {obs.kind!r}")
    _write_text(_fmt(value) + "\n", args.out)


def cmd_ptrace(args) -> None:
    sigma = _real_state(args.inp)
    try:
        keep = [int(k) for k in args.keep.split(",")]
    except ValueError:
        raise UsageError(f"--keep expects comma-separated qubit numbers, got {args.keep!r}") from None
    _write_state(real_file(observables.partial_trace(sigma, keep)), args.out)


def cmd_purity(args) -> None:
    _write_text(_fmt(observables.purity(_real_state(args.inp))) + "\n", args.out)


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realdm", description="Real density matrix toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, out=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--in", dest="inp", default="-", help="input file (default stdin)")
        if out:
            sp.add_argument("--out", default="-", help="output file (default stdout)")
        sp.set_defaults(func=func)
        return sp

    sp = add("transform", cmd_transform, "convert between hermitian and real domains")
    sp.add_argument("--to", choices=("real", "hermitian"), required=True)

    sp = add("evolve", cmd_evolve, "rotate one qubit or evolve a bi-axial pair")
    sp.add_argument("--axis", choices=("x", "y", "z"))
    sp.add_argument("--angle", type=float)
    sp.add_argument("--nu", help="generator entries nu10,nu01,nu11")
    sp.add_argument("--time", type=float)
    sp.add_argument("--biaxial", action="store_true")
    sp.add_argument("--in2", help="second qubit's state file for --biaxial")
    sp.add_argument("--nu1")
    sp.add_argument("--nu2")

    sp = add("ising", cmd_ising, "weak scalar coupling of two qubits")
    sp.add_argument("--J", type=float, required=True)
    sp.add_argument("--time", type=float, required=True)

    sp = add("relax", cmd_relax, "T1/T2 relaxation")
    sp.add_argument("--T1", help="comma-separated, one per qubit")
    sp.add_argument("--T2", required=True, help="comma-separated, one per qubit (one value if correlated)")
    sp.add_argument("--time", type=float, required=True)
    sp.add_argument("--correlated", action="store_true")
    sp.add_argument("--equilibrium", help="real or hermitian state file to relax towards")

    sp = add("choi", cmd_choi, "Choi matrix of a superoperator, or its operator sum")
    sp.add_argument("--opsum", action="store_true")

    sp = add("plot", cmd_plot, "bar chart of a real density matrix")
    sp.add_argument("--format", choices=("svg", "csv"), default="svg")
    sp.add_argument("--title")

    sp = add("expect", cmd_expect, "expectation value of an observable")
    sp.add_argument("--observable", required=True)

    sp = add("ptrace", cmd_ptrace, "partial trace onto the listed qubits")
    sp.add_argument("--keep", required=True, help="1-based qubits, e.g. 1,3")

    add("purity", cmd_purity, "purity tr(rho^2)")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, OSError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
