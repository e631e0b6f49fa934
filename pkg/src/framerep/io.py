"""File formats for frames, matrices and vectors.

JSON is the canonical interchange; complex entries are stored as interleaved
(re, im) float pairs to stay inside plain JSON.  Canonical output is a single
compact line, UTF-8, LF-terminated, with floats rendered in their shortest
exact (round-trip) form, so serialize(parse(serialize(x))) is byte-stable.

Schemas (format version 1):

* frame:  ``{"version":1,"dim":n,"vectors":[[re,im,...2n floats], ...]}``
* matrix: ``{"version":1,"rows":r,"cols":c,"entries":[re,im,... 2rc floats]}``

``parse_matrix`` also accepts plain CSV for real matrices, one row per line.
Vectors travel as single-column (or single-row) matrices.
"""

from __future__ import annotations

import json

import numpy as np

from .exceptions import DimensionMismatch, ParseError
from .frames import Frame
from .linalg import as_matrix, as_vector

FORMAT_VERSION = 1


def _reject_constant(token: str):
    raise ParseError(f"non-finite literal {token!r} is not allowed")


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    return obj


def _check_version(obj: dict):
    version = obj.get("version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version!r}, expected {FORMAT_VERSION}")


def _float_row(row, expected_len: int | None, what: str) -> list[float]:
    if not isinstance(row, list):
        raise ParseError(f"{what} must be an array of numbers")
    if len(row) % 2 != 0:
        raise ParseError(f"{what} must hold (re, im) pairs, got odd length {len(row)}")
    if expected_len is not None and len(row) != expected_len:
        raise DimensionMismatch(
            f"{what} has {len(row)} floats, expected {expected_len}"
        )
    out = []
    for x in row:
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ParseError(f"{what} contains a non-numeric entry {x!r}")
        out.append(float(x))
    return out


def _interleaved_to_complex(flat: list[float]) -> np.ndarray:
    a = np.asarray(flat, dtype=np.float64)
    return a[0::2] + 1j * a[1::2]


def _complex_to_interleaved(z: np.ndarray) -> list[float]:
    flat = np.column_stack([z.real.ravel(), z.imag.ravel()]).ravel()
    return flat.tolist()


def canonical_json(obj) -> str:
    """Render a JSON payload in canonical form: compact, one line, LF-ended."""
    return json.dumps(obj, separators=(",", ":")) + "\n"


# -- frames ---------------------------------------------------------------

def parse_frame(text: str) -> Frame:
    """Parse the JSON frame format into a :class:`Frame`."""
    obj = _load_json(text)
    _check_version(obj)
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    rows = obj.get("vectors")
    if not isinstance(rows, list):
        raise ParseError("'vectors' must be an array of rows")
    if not rows:
        raise ParseError("frame must contain at least one vector")
    vectors = np.empty((len(rows), dim), dtype=np.complex128)
    for k, row in enumerate(rows):
        flat = _float_row(row, 2 * dim, f"vector {k}")
        vectors[k] = _interleaved_to_complex(flat)
    return Frame(vectors)


def frame_payload(frame: Frame) -> dict:
    """The frame as a canonical-order JSON object."""
    rows = [_complex_to_interleaved(frame.vectors[k]) for k in range(frame.count)]
    return {"version": FORMAT_VERSION, "dim": frame.space_dim, "vectors": rows}


def serialize_frame(frame: Frame) -> str:
    """Canonical JSON text for a frame."""
    return canonical_json(frame_payload(frame))


# -- matrices -------------------------------------------------------------

def _parse_matrix_json(obj: dict) -> np.ndarray:
    _check_version(obj)
    rows, cols = obj.get("rows"), obj.get("cols")
    for name, value in (("rows", rows), ("cols", cols)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParseError(f"'{name}' must be a positive integer, got {value!r}")
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise ParseError("'entries' must be an array of numbers")
    flat = _float_row(entries, None, "entries")
    if len(flat) != 2 * rows * cols:
        raise DimensionMismatch(
            f"entries hold {len(flat) // 2} values, expected rows*cols = {rows * cols}"
        )
    return _interleaved_to_complex(flat).reshape(rows, cols)


def _parse_matrix_csv(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        cells = line.split(",")
        try:
            row = [float(cell) for cell in cells]
        except ValueError as exc:
            raise ParseError(f"invalid number in CSV: {exc}", line=lineno) from exc
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"ragged CSV row: {len(row)} columns, expected {width}", line=lineno
            )
        rows.append(row)
    if not rows:
        raise ParseError("empty CSV input")
    return np.asarray(rows, dtype=np.float64).astype(np.complex128)


def parse_matrix(text: str) -> np.ndarray:
    """Parse a complex matrix from JSON (canonical) or real-valued CSV."""
    if text.lstrip().startswith("{"):
        return as_matrix(_parse_matrix_json(_load_json(text)), "parsed matrix")
    return as_matrix(_parse_matrix_csv(text), "parsed matrix")


def matrix_payload(matrix) -> dict:
    """The matrix as a canonical-order JSON object."""
    m = as_matrix(matrix)
    return {
        "version": FORMAT_VERSION,
        "rows": m.shape[0],
        "cols": m.shape[1],
        "entries": _complex_to_interleaved(m),
    }


def serialize_matrix(matrix) -> str:
    """Canonical JSON text for a complex matrix."""
    return canonical_json(matrix_payload(matrix))


# -- vectors (single-column matrices) --------------------------------------

def parse_vector(text: str) -> np.ndarray:
    """Parse a vector stored as a 1 x n or n x 1 matrix."""
    m = parse_matrix(text)
    if m.shape[0] != 1 and m.shape[1] != 1:
        raise DimensionMismatch(
            f"expected a single-row or single-column matrix, got {m.shape[0]}x{m.shape[1]}"
        )
    return m.ravel()


def vector_payload(v) -> dict:
    """The vector as a single-column matrix JSON object."""
    v = as_vector(v)
    return matrix_payload(v.reshape(-1, 1))


def serialize_vector(v) -> str:
    """Canonical JSON text for a vector, stored as an n x 1 matrix."""
    return canonical_json(vector_payload(v))
