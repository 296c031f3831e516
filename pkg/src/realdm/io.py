"""JSON state files.

A file holds ``{"version": 1, "qubits": n, "kind": k, "data": [[...]]}`` with
``k`` one of hermitian, real, superop, choi. Complex entries are ``[re, im]``
pairs and real entries plain numbers. A superop whose entries are all plain
numbers is a real-domain propagator; with ``[re, im]`` entries it acts on
Hermitian matrices.

Canonical text uses that key order, no whitespace and Python's shortest
round-trip float repr, so ``dumps(loads(text)) == text`` for canonical input.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Literal

import numpy as np

from .tensor_core import MAX_STATE_QUBITS, MAX_SUPEROP_QUBITS, DomainError, check_qubits
from .xform import ValidationError, validate_hermitian, validate_hermitian_density, validate_real_density

FORMAT_VERSION = 1
KINDS = ("hermitian", "real", "superop", "choi")


@dataclass(frozen=True, eq=False)
class StateFile:
    kind: Literal["hermitian", "real", "superop", "choi"]
    qubits: int
    data: np.ndarray
    version: int = FORMAT_VERSION

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.data)

    @property
    def domain(self) -> str:
        """Domain of a superop file: 'real' for plain-number data."""
        return "real" if self.is_real else "hermitian"

    def __eq__(self, other):
        if not isinstance(other, StateFile):
            return NotImplemented
        return (
            (self.kind, self.qubits, self.version) == (other.kind, other.qubits, other.version)
            and self.data.dtype == other.data.dtype
            and np.array_equal(self.data, other.data)
        )


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValidationError("data", f"{where}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError("finite", f"{where}: non-finite value")
    return x


def _decode_matrix(rows) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValidationError("data", "data must be a non-empty list of rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValidationError("data", "rows have unequal lengths")
    pairs = [isinstance(x, list) for r in rows for x in r]
    if any(pairs) and not all(pairs):
        raise ValidationError("data", "mixes [re, im] pairs with plain numbers")
    if not all(pairs):
        return np.array([[_number(x, f"row {i}") for x in r] for i, r in enumerate(rows)], dtype=float)
    out = np.empty((len(rows), width), dtype=complex)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if len(x) != 2:
                raise ValidationError("data", f"entry ({i},{j}) must be [re, im]")
            out[i, j] = complex(_number(x[0], f"entry ({i},{j})"), _number(x[1], f"entry ({i},{j})"))
    return out


def _encode_matrix(m: np.ndarray) -> list:
    if np.iscomplexobj(m):
        return [[[float(x.real), float(x.imag)] for x in row] for row in m]
    return [[float(x) for x in row] for row in m]


def _expected_side(kind: str, n: int) -> int:
    if kind in ("hermitian", "real"):
        check_qubits(n, MAX_STATE_QUBITS)
        return 2**n
    check_qubits(n, MAX_SUPEROP_QUBITS)
    return 4**n


def from_dict(obj, *, density: bool = True) -> StateFile:
    """Validate a decoded JSON object.

    With ``density=False`` hermitian and real files are read as observables:
    Hermiticity is still required but not unit trace or a unit corner.
    """
    if not isinstance(obj, dict):
        raise ValidationError("format", "top level must be a JSON object")
    missing = [k for k in ("version", "qubits", "kind", "data") if k not in obj]
    if missing:
        raise ValidationError("format", f"missing field(s) {', '.join(missing)}")
    if obj["version"] != FORMAT_VERSION or isinstance(obj["version"], bool):
        raise ValidationError("version", f"unsupported version {obj['version']!r}")
    kind = obj["kind"]
    if kind not in KINDS:
        raise ValidationError("kind", f"unknown kind {kind!r}")
    n = obj["qubits"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValidationError("qubits", f"qubits must be an integer, got {n!r}")
    side = _expected_side(kind, n)
    data = _decode_matrix(obj["data"])
    if data.shape != (side, side):
        raise DomainError(f"{kind} data for {n} qubit(s) must be {side}x{side}, got {data.shape[0]}x{data.shape[1]}")
    if kind == "hermitian":
        data = data.astype(complex)
        data = validate_hermitian_density(data) if density else validate_hermitian(data)
    elif kind == "real":
        if np.iscomplexobj(data):
            raise ValidationError("real", "real-kind data must hold plain numbers")
        if density:
            data = validate_real_density(data)
    elif kind == "choi":
        data = data.astype(complex)
    return StateFile(kind, n, data)


def to_dict(state: StateFile) -> dict:
    data = state.data
    if state.kind in ("hermitian", "choi"):
        data = np.asarray(data, dtype=complex)
    return {"version": state.version, "qubits": state.qubits, "kind": state.kind, "data": _encode_matrix(data)}


def dumps(state: StateFile) -> str:
    return json.dumps(to_dict(state), separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def loads(text: str, *, density: bool = True) -> StateFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("json", f"malformed JSON: {exc}") from None
    return from_dict(obj, density=density)


def load_state(source: str | IO[str], *, density: bool = True) -> StateFile:
    """Read a state file from a path or an open text stream."""
    if hasattr(source, "read"):
        return loads(source.read(), density=density)
    with open(source, encoding="utf-8") as fh:
        return loads(fh.read(), density=density)


def save_state(state: StateFile, target: str | IO[str]) -> None:
    text = dumps(state) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def hermitian_file(rho: np.ndarray) -> StateFile:
    rho = np.asarray(rho, dtype=complex)
    return StateFile("hermitian", int(rho.shape[0]).bit_length() - 1, rho)


def real_file(sigma: np.ndarray) -> StateFile:
    sigma = np.asarray(sigma, dtype=float)
    return StateFile("real", int(sigma.shape[0]).bit_length() - 1, sigma)


def superop_file(mat: np.ndarray, kind: Literal["superop", "choi"] = "superop") -> StateFile:
    mat = np.asarray(mat)
    n = (int(mat.shape[0]).bit_length() - 1) // 2
    return StateFile(kind, n, mat)
