"""Bar charts of the real density matrices of the two-qubit computational
basis states and the four Bell states, one SVG per state.

    python scripts/bar_panels.py --out-dir panels
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from realdm.plot import render_bars, render_csv
from realdm.xform import to_real


@dataclass
class PanelConfig:
    out_dir: Path = Path("panels")
    csv: bool = False


def basis_states():
    for k, label in enumerate(["00", "01", "10", "11"]):
        psi = np.zeros(4)
        psi[k] = 1
        yield f"ket{label}", psi


def bell_states():
    r = 1 / np.sqrt(2)
    yield "phi_plus", r * np.array([1, 0, 0, 1])
    yield "phi_minus", r * np.array([1, 0, 0, -1])
    yield "psi_plus", r * np.array([0, 1, 1, 0])
    yield "psi_minus", r * np.array([0, 1, -1, 0])


def main(cfg: PanelConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for name, psi in [*basis_states(), *bell_states()]:
        sigma = to_real(np.outer(psi, psi.conj()))
        (cfg.out_dir / f"{name}.svg").write_text(render_bars(sigma, title=name) + "\n")
        nonzero = [(i, j, sigma[i, j]) for i, j in zip(*np.nonzero(np.abs(sigma) > 1e-12))]
        print(f"{name:10s}", " ".join(f"({i},{j})={v:+.0f}" for i, j, v in nonzero))
        if cfg.csv:
            (cfg.out_dir / f"{name}.csv").write_text(render_csv(sigma))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=PanelConfig.out_dir)
    p.add_argument("--csv", action="store_true", help="also write i,j,value tables")
    main(PanelConfig(**vars(p.parse_args())))
