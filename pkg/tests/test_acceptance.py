"""Acceptance suite: one test per criterion, each recording a pass/fail line
with the worst error observed (printed in the terminal summary)."""

import itertools
import json
import xml.etree.ElementTree as ET

import numpy as np
from scipy.linalg import expm

from conftest import record
from helpers import (
    biaxial_route,
    conjugate,
    hermitian_ptrace,
    rand_density,
    rand_hermitian,
    rand_pure,
    rand_unitary,
    rk4,
    trace_oracle,
)
from realdm import channels, dynamics, observables, xform
from realdm.cli import run
from realdm.io import dumps, hermitian_file, load_state, loads, real_file, superop_file
from realdm.plot import render_bars
from realdm.tensor_core import choi_reshuffle, pauli, pauli_product, unvec, vec


def _maxabs(x):
    return float(np.max(np.abs(x)))


def test_01_bijection():
    rng = np.random.default_rng(101)
    worst_rt = worst_imag = 0.0
    corners = True
    for n in range(1, 5):
        for _ in range(100):
            rho = rand_density(rng, n)
            raw = xform.u_map(rho)
            sigma = xform.to_real(rho)
            corners &= sigma[0, 0] == 1.0
            worst_imag = max(worst_imag, _maxabs(raw.imag))
            worst_rt = max(worst_rt, _maxabs(xform.to_hermitian(sigma) - rho))
    ok = worst_rt <= 1e-12 and worst_imag <= 1e-12 and corners
    record(1, "bijection", ok, f"round trip {worst_rt:.1e}, imag {worst_imag:.1e}, sigma00 exact {corners}")
    assert ok


def test_02_pauli_algebra():
    mismatches = 0
    for i, j, k, l in itertools.product(range(4), repeat=4):
        phase, ri, rj = 0, 0, 0
        for q in range(2):  # closed-form rule per qubit bit
            b = lambda v: (v >> (1 - q)) & 1
            r = pauli_product(b(i), b(j), b(k), b(l))
            phase += r.phase_exponent
            ri |= r.index_i << (1 - q)
            rj |= r.index_j << (1 - q)
        lhs = pauli(i, j, 2) @ pauli(k, l, 2)
        mismatches += not np.array_equal(1j ** (phase % 4) * pauli(ri, rj, 2), lhs)
    ok = mismatches == 0
    record(2, "Pauli algebra", ok, f"{256 - mismatches}/256 products exact")
    assert ok


def test_03_purity():
    rng = np.random.default_rng(103)
    worst = worst_pure = 0.0
    for n in range(1, 5):
        for _ in range(25):
            rho = rand_density(rng, n)
            worst = max(worst, abs(observables.purity(xform.to_real(rho)) - np.trace(rho @ rho).real))
            worst_pure = max(worst_pure, abs(observables.purity(xform.to_real(rand_pure(rng, n))) - 1))
    ok = worst <= 1e-12 and worst_pure <= 1e-12
    record(3, "purity identity", ok, f"mixed {worst:.1e}, pure {worst_pure:.1e}")
    assert ok


def test_04_expectation():
    rng = np.random.default_rng(104)
    worst = 0.0
    for n in range(1, 4):
        for _ in range(100):
            mu, rho = rand_hermitian(rng, 2**n), rand_density(rng, n)
            got = observables.expect(observables.ObservablePair(mu), xform.to_real(rho))
            worst = max(worst, abs(got - np.trace(mu @ rho).real))
    ok = worst <= 1e-12
    record(4, "expectation identity", ok, f"max error {worst:.1e} over 300 pairs")
    assert ok


def test_05_partial_trace():
    rng = np.random.default_rng(105)
    worst = 0.0
    for n in (2, 3):
        for _ in range(20):
            rho = rand_density(rng, n)
            sigma = xform.to_real(rho)
            for drop in range(1, n + 1):
                keep = [q for q in range(1, n + 1) if q != drop]
                expected = xform.to_real(hermitian_ptrace(rho, drop, n))
                worst = max(worst, _maxabs(observables.partial_trace(sigma, keep) - expected))
    ok = worst <= 1e-12
    record(5, "partial trace", ok, f"max error {worst:.1e}")
    assert ok


def test_06_bell_fixture():
    psi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    rho = np.outer(psi, psi)
    sigma = xform.to_real(rho)
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[3, 0] = expected[3, 3] = 1
    expected[0, 3] = -1
    err = max(_maxabs(sigma - expected), _maxabs(trace_oracle(rho) - expected))
    rects = ET.fromstring(render_bars(sigma)).findall(".//{http://www.w3.org/2000/svg}rect")
    tall = {(int(r.get("data-i")), int(r.get("data-j"))): float(r.get("data-value")) for r in rects if float(r.get("height")) > 0}
    bars_ok = len(rects) == 16 and tall == {(0, 0): 1.0, (3, 0): 1.0, (0, 3): -1.0, (3, 3): 1.0}
    ok = err <= 1e-12 and bars_ok
    record(6, "Bell fixture", ok, f"entry error {err:.1e}, {len(rects)} bars, signed peaks ok {bars_ok}")
    assert ok


def _rand_gen(rng):
    return dynamics.RotationGenerator.from_vector(*rng.normal(size=3))


def test_07_rotation_dynamics():
    rng = np.random.default_rng(107)
    worst = worst_alg = worst_geo = 0.0
    for _ in range(100):
        g = _rand_gen(rng)
        t = rng.uniform(-5, 5)
        sigma = xform.to_real(rand_density(rng, 1))
        u = expm(-1j * g.hamiltonian() * t / 2)
        out = dynamics.evolve_1q(sigma, g, t)
        worst = max(worst, _maxabs(out - xform.to_real(conjugate(u, xform.to_hermitian(sigma)))))
        worst_geo = max(worst_geo, _maxabs(dynamics.evolve_1q_geometric(sigma, g, t) - out))
        r, s = dynamics.rotation_superop(g), dynamics.s_superop(g)
        nrm2 = g.norm**2
        worst_alg = max(
            worst_alg,
            _maxabs(r @ r @ r + nrm2 * r),
            _maxabs(s @ s @ s - nrm2 * s),
            _maxabs(s @ r),
            _maxabs(r @ s),
        )
    ok = worst <= 1e-10 and worst_alg <= 1e-12 and worst_geo <= 1e-12
    record(7, "rotation dynamics", ok, f"oracle {worst:.1e}, R/S algebra {worst_alg:.1e}, geometric {worst_geo:.1e}")
    assert ok


def test_08_biaxial_dynamics():
    rng = np.random.default_rng(108)
    worst = worst_route = 0.0
    for _ in range(100):
        g1, g2 = _rand_gen(rng), _rand_gen(rng)
        t = rng.uniform(-4, 4)
        s1, s2 = xform.to_real(rand_density(rng, 1)), xform.to_real(rand_density(rng, 1))
        rho = np.kron(xform.to_hermitian(s1), xform.to_hermitian(s2))
        u = expm(-1j * np.kron(g1.hamiltonian(), g2.hamiltonian()) * t / 4)
        out = dynamics.evolve_biaxial(s1, s2, g1, g2, t)
        worst = max(worst, _maxabs(out - xform.to_real(conjugate(u, rho))))
        worst_route = max(worst_route, _maxabs(biaxial_route(s1, s2, g1, g2, t) - out))
    ok = worst <= 1e-10 and worst_route <= 1e-10
    record(8, "bi-axial dynamics", ok, f"oracle {worst:.1e}, S(x)R+R(x)S route {worst_route:.1e}")
    assert ok


def test_09_operator_sums():
    rng = np.random.default_rng(109)
    w_choi = np.array([[1, 0, 0, -1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, -1]], dtype=complex)
    ops = xform.opsum_from_choi(w_choi)
    w_err = 0.0
    for _ in range(10):
        x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        w = pauli(0, 0, 1) @ x @ pauli(1, 1, 1) + pauli(1, 0, 1) @ x @ pauli(1, 0, 1)
        w_err = max(w_err, _maxabs(ops.apply(x) - w))
    worst = 0.0
    for k in range(50):
        n = 1 + k % 2
        d = 2**n
        kraus = [rand_unitary(rng, d) * np.sqrt(p) for p in rng.dirichlet(np.ones(3))]
        s = sum(np.kron(a.conj(), a) for a in kraus)
        rec = xform.opsum_from_choi(choi_reshuffle(s))
        for i, j in itertools.product(range(d), repeat=2):
            e = np.zeros((d, d))
            e[i, j] = 1
            worst = max(worst, _maxabs(rec.apply(e) - unvec(s @ vec(e), d)))
    svd_err = 0.0
    for theta in np.linspace(0.1, 3.0, 7):
        u = expm(-1j * theta / 2 * pauli(1, 0, 1))
        t = xform.superop_to_real(xform.unitary_superop(u)).mat
        coef = sorted(np.abs(xform.opsum_from_choi(choi_reshuffle(t)).coefficients))
        svd_err = max(svd_err, _maxabs(np.array(coef) - sorted([np.cos(theta / 2), np.sin(theta / 2)])))
    ok = len(ops) == 2 and w_err <= 1e-12 and worst <= 1e-10 and svd_err <= 1e-12
    record(9, "operator-sum extraction", ok, f"W {w_err:.1e}, 50 channels {worst:.1e}, x-rotation values {svd_err:.1e}")
    assert ok


def test_10_ising():
    rng = np.random.default_rng(110)
    phases = np.sort(np.concatenate([np.linspace(0, 2 * np.pi, 31), [np.pi / 2]]))
    worst = 0.0
    for a in phases:
        rho = rand_density(rng, 2)
        J, t = 1.0, a / np.pi
        u = expm(-1j * pauli(3, 3, 2) * np.pi * J * t / 2)
        worst = max(worst, _maxabs(channels.ising_apply(xform.to_real(rho), J, t) - xform.to_real(conjugate(u, rho))))
    plus, zero = np.array([[1.0, 0], [1, 0]]), np.array([[1.0, 0], [0, 1]])
    out = channels.ising_apply(np.kron(plus, zero), 1.0, 0.5)
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[1, 1] = expected[1, 3] = expected[0, 2] = 1
    fix_err = _maxabs(out - expected)
    ok = len(phases) == 32 and worst <= 1e-12 and fix_err <= 1e-12
    record(10, "Ising channel", ok, f"grid of {len(phases)} phases {worst:.1e}, fixture {fix_err:.1e}")
    assert ok


def test_11_relaxation():
    # composite rate matrix vs the displayed pattern (coefficients over
    # 1/T2 of qubit 1, 1/T1 of qubit 1, 1/T2 of qubit 2, 1/T1 of qubit 2)
    display = {
        (0, 0): (0, 0, 0, 0), (0, 1): (0, 0, 1, 0), (0, 2): (1, 0, 0, 0), (0, 3): (1, 0, 1, 0),
        (1, 1): (0, 0, 0, 1), (1, 2): (1, 0, 1, 0), (1, 3): (1, 0, 0, 1),
        (2, 2): (0, 1, 0, 0), (2, 3): (0, 1, 1, 0), (3, 3): (0, 1, 0, 1),
    }  # fmt: skip
    pattern_ok = True
    for k in range(4):
        rates = np.full(4, 1e-9)
        rates[k] = 1.0
        spec = channels.RelaxationSpec(T1=(1 / rates[1], 1 / rates[3]), T2=(1 / rates[0], 1 / rates[2]))
        m = channels.composite_rate_matrix(spec)
        pattern_ok &= all(np.isclose(m[r, c], np.dot(cf, rates), atol=1e-8) and m[r, c] == m[c, r] for (r, c), cf in display.items())
    rng = np.random.default_rng(111)
    sigma = xform.to_real(rand_density(rng, 2))
    ode_err = zq = dq = 0.0
    y, t_prev, h = sigma, 0.0, 1e-3
    for t in np.linspace(0, 3, 7):
        steps = int(round((t - t_prev) / h))
        if steps:
            y = rk4(lambda s: channels.correlated_generator(s, 1.0), y, t - t_prev, steps)
        t_prev = t
        out = channels.relax_correlated_2q(sigma, 1.0, t)
        ode_err = max(ode_err, _maxabs(out - y))
        zq = max(zq, abs((out[1, 2] - out[2, 1]) - (sigma[1, 2] - sigma[2, 1])), abs((out[0, 3] + out[3, 0]) - (sigma[0, 3] + sigma[3, 0])))
        decay = np.exp(-4 * t)
        dq = max(
            dq,
            abs((out[3, 0] - out[0, 3]) - (sigma[3, 0] - sigma[0, 3]) * decay),
            abs((out[1, 2] + out[2, 1]) - (sigma[1, 2] + sigma[2, 1]) * decay),
        )
    ok = pattern_ok and ode_err <= 1e-8 and zq <= 1e-12 and dq <= 1e-10
    record(11, "relaxation", ok, f"pattern {pattern_ok}, RK4 {ode_err:.1e}, zero-quantum {zq:.1e}, double-quantum {dq:.1e}")
    assert ok


def test_12_superop_translation():
    rng = np.random.default_rng(112)
    worst = 0.0
    for k in range(50):
        n = 1 + k % 2
        s = xform.unitary_superop(rand_unitary(rng, 2**n))
        t = xform.superop_to_real(s)
        for _ in range(3):
            rho = rand_density(rng, n)
            lhs = t.mat @ vec(xform.to_real(rho))
            rhs = vec(xform.u_map(unvec(s.mat @ vec(rho), 2**n)))
            worst = max(worst, _maxabs(lhs - rhs))
    ident = max(_maxabs(xform.superop_to_real(np.eye(4**n)).mat - np.eye(4**n)) for n in (1, 2))
    r_herm = np.array([[0, 1, 1, 4], [1, 0, 0, 1], [1, 0, 0, 1], [4, 1, 1, 0]], dtype=float)
    t = xform.superop_to_real(np.diag(vec(r_herm))).mat
    display = np.diag([0, 1, 1, 2, 1, 0, 2, 1, 1, 2, 0, 1, 2, 1, 1, 0]).astype(float)
    display[3, 12] = display[12, 3] = -2
    display[6, 9] = display[9, 6] = 2
    corr = _maxabs(t - display)
    ok = worst <= 1e-10 and ident <= 1e-12 and corr <= 1e-12
    record(12, "superoperator translation", ok, f"vec action {worst:.1e}, identity {ident:.1e}, correlated 16x16 {corr:.1e}")
    assert ok


def test_13_cli(tmp_path, capsys):
    rng = np.random.default_rng(113)
    rho2, rho1, rho1b = rand_density(rng, 2), rand_density(rng, 1), rand_density(rng, 1)
    sig2, sig1, sig1b = (xform.to_real(r) for r in (rho2, rho1, rho1b))
    paths = {}
    for name, state in {
        "rho2": hermitian_file(rho2),
        "sig2": real_file(sig2),
        "sig1": real_file(sig1),
        "sig1b": real_file(sig1b),
        "obs": hermitian_file(pauli(1, 3, 2)),
        "sup": superop_file(xform.unitary_superop(rand_unitary(rng, 2)).mat),
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(dumps(state) + "\n")
        paths[name] = str(p)
    out = str(tmp_path / "out.json")

    # canonical round trip
    texts = [open(paths[k]).read() for k in ("rho2", "sig2", "sup")]
    byte_ok = all(dumps(loads(t)) + "\n" == t for t in texts)

    def state_of(argv):
        assert run(argv + ["--out", out]) == 0
        return load_state(out).data

    def scalar_of(argv):
        capsys.readouterr()
        assert run(argv) == 0
        return float(capsys.readouterr().out)

    sup = load_state(paths["sup"]).data
    g = dynamics.RotationGenerator.from_vector(0.4, -1.0, 2.0)
    gx, gz = dynamics.RotationGenerator.from_vector(2, 0, 0), dynamics.RotationGenerator.from_vector(0, 0, 2)
    spec = channels.RelaxationSpec(T1=(1.0, 2.0), T2=(0.5, 0.7))
    checks = {
        "transform": (state_of(["transform", "--to", "real", "--in", paths["rho2"]]), sig2),
        "evolve-axis": (state_of(["evolve", "--axis", "z", "--angle", "0.9", "--in", paths["sig1"]]), channels.apply_rotation("z", 0.9, sig1)),
        "evolve-nu": (state_of(["evolve", "--nu", "0.4,-1,2", "--time", "1.1", "--in", paths["sig1"]]), dynamics.evolve_1q(sig1, g, 1.1)),
        "evolve-biaxial": (
            state_of(["evolve", "--biaxial", "--in", paths["sig1"], "--in2", paths["sig1b"], "--nu1", "2,0,0", "--nu2", "0,0,2", "--time", "0.7"]),
            dynamics.evolve_biaxial(sig1, sig1b, gx, gz, 0.7),
        ),
        "ising": (state_of(["ising", "--J", "0.8", "--time", "0.6", "--in", paths["sig2"]]), channels.ising_apply(sig2, 0.8, 0.6)),
        "relax": (
            state_of(["relax", "--T1", "1,2", "--T2", "0.5,0.7", "--time", "0.3", "--in", paths["sig2"]]),
            channels.relax_uncorrelated(sig2, spec, 0.3),
        ),
        "relax-correlated": (
            state_of(["relax", "--correlated", "--T2", "0.5", "--time", "0.3", "--in", paths["sig2"]]),
            channels.relax_correlated_2q(sig2, 0.5, 0.3),
        ),
        "choi": (state_of(["choi", "--in", paths["sup"]]), choi_reshuffle(sup)),
        "ptrace": (state_of(["ptrace", "--keep", "1", "--in", paths["sig2"]]), observables.partial_trace(sig2, [1])),
        "purity": (scalar_of(["purity", "--in", paths["sig2"]]), observables.purity(sig2)),
        "expect": (scalar_of(["expect", "--observable", paths["obs"], "--in", paths["sig2"]]), observables.expect(pauli(1, 3, 2), sig2)),
    }
    capsys.readouterr()
    assert run(["choi", "--opsum", "--in", paths["sup"], "--out", out]) == 0
    terms = json.loads(open(out).read())["terms"]
    ref = xform.opsum_from_choi(choi_reshuffle(sup))
    checks["choi-opsum"] = (
        np.array([complex(*t["coefficient"]) for t in terms]),
        ref.coefficients,
    )
    assert run(["plot", "--format", "csv", "--in", paths["sig2"], "--out", out]) == 0
    csv_vals = np.array([float(line.split(",")[2]) for line in open(out).read().splitlines()[1:]])
    checks["plot"] = (csv_vals, sig2.ravel())
    # scalars and CSV carry 12 significant digits; every value here has
    # magnitude at most 1, so rounding stays below 1e-12
    errs = {}
    for k, (got, want) in checks.items():
        diff = np.max(np.abs(np.asarray(got) - np.asarray(want)))
        errs[k] = (diff, diff <= 1e-12)
    lib_ok = all(ok for _, ok in errs.values())

    bad = tmp_path / "bad.json"
    malformed = {
        "σ00": '{"version":1,"qubits":1,"kind":"real","data":[[0.9,0.0],[0.0,0.0]]}',
        "trace": '{"version":1,"qubits":1,"kind":"hermitian","data":[[[1,0],[0,0]],[[0,0],[1,0]]]}',
        "hermitian": '{"version":1,"qubits":1,"kind":"hermitian","data":[[[0.5,0],[1,0]],[[0,0],[0.5,0]]]}',
        "json": '{"version":1,',
        "kind": '{"version":1,"qubits":1,"kind":"vector","data":[[1.0]]}',
    }
    bad_ok = True
    for invariant, text in malformed.items():
        bad.write_text(text)
        capsys.readouterr()
        code = run(["transform", "--to", "real", "--in", str(bad)])
        bad_ok &= code == 1 and invariant in capsys.readouterr().err
    ok = byte_ok and lib_ok and bad_ok
    worst = max(d for d, _ in errs.values())
    record(13, "CLI", ok, f"byte-stable {byte_ok}, {len(checks)} subcommand paths max diff {worst:.1e}, malformed inputs exit 1 {bad_ok}")
    assert ok
