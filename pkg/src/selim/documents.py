"""JSON problem documents: schema validation and conversion to library objects."""

from __future__ import annotations

import json
from contextlib import contextmanager
from functools import lru_cache
from importlib import resources

import jsonschema

from .bounds import PER_BLOCK, PER_EQUATION, BlockStructure, DegreeMatrix
from .errors import DimensionError, SelimError
from .games import BilinearTriple, PayoffTensor
from .implicit import ParametricPlaneCurve, SupportSet
from .polygon import ConvexPolygon
from .poly import SparsePolynomial
from .resultants import DenseHomogeneousSystem, UnivariatePair

KINDS = (
    "degree-matrix",
    "payoff-tensor",
    "bilinear-triple",
    "polynomial-system",
    "univariate-pair",
    "parametric-curve",
    "polygon-pair",
)


class DocumentError(SelimError, ValueError):
    """A problem document is malformed; ``pointer`` locates the failing field."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '<document>'}: {message}")
        self.pointer = pointer


@lru_cache(maxsize=None)
def schema(kind: str) -> dict:
    text = resources.files("selim").joinpath("schemas", f"{kind}.json").read_text()
    return json.loads(text)


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path)


def validate(doc, kind: str | None = None) -> dict:
    """Check a decoded document against the schema of its kind and return it."""
    if not isinstance(doc, dict):
        raise DocumentError("a problem document must be a JSON object")
    found = doc.get("kind")
    if found not in KINDS:
        raise DocumentError(f"unknown kind {found!r}; expected one of {', '.join(KINDS)}", "/kind")
    if kind is not None and found != kind:
        raise DocumentError(f"expected a {kind} document, got {found}", "/kind")
    errors = sorted(jsonschema.Draft202012Validator(schema(found)).iter_errors(doc),
                    key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise DocumentError(err.message, _pointer(err.absolute_path))
    return doc


def load(text: str, kind: str | None = None) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return validate(doc, kind)


def document(kind: str, payload: dict, metadata: str | None = None) -> dict:
    doc = {"kind": kind, "payload": payload}
    if metadata:
        doc["metadata"] = metadata
    return doc


@contextmanager
def guard(pointer: str):
    """Re-raise library validation errors as document errors at ``pointer``."""
    try:
        yield
    except DocumentError:
        raise
    except (ValueError, SelimError) as exc:
        raise DocumentError(str(exc), pointer) from exc


def degree_data(doc: dict, want: str) -> tuple[DegreeMatrix, BlockStructure]:
    """Degree matrix in the requested form, converting between the two when possible.

    An N x S matrix collapses to S x S only if the rows of each block agree.
    """
    payload = doc["payload"]
    with guard("/payload/blocks"):
        blocks = BlockStructure(tuple(payload["blocks"]))
    rows = [tuple(r) for r in payload["matrix"]]
    form = payload.get("form")
    if form is None:
        form = PER_EQUATION if len(rows) == blocks.N else PER_BLOCK
    with guard("/payload/matrix"):
        d = DegreeMatrix(tuple(rows), form)
        d.check_blocks(blocks)
        if form == want:
            return d, blocks
        if want == PER_EQUATION:
            rows = [r for r, n in zip(d.entries, blocks.block_sizes) for _ in range(n)]
            return DegreeMatrix(tuple(rows), PER_EQUATION), blocks
        collapsed, k = [], 0
        for n in blocks.block_sizes:
            group = d.entries[k:k + n]
            if len(set(group)) != 1:
                raise DimensionError(
                    f"equations {k}..{k + n - 1} have different degrees; the generating "
                    "function needs a square semi-mixed system")
            collapsed.append(group[0])
            k += n
        return DegreeMatrix(tuple(collapsed), PER_BLOCK), blocks


def polynomial(obj: dict, pointer: str) -> SparsePolynomial:
    with guard(pointer):
        return SparsePolynomial.from_json(obj)


def univariate_pair(doc: dict) -> UnivariatePair:
    p = doc["payload"]
    f, g = polynomial(p["f"], "/payload/f"), polynomial(p["g"], "/payload/g")
    with guard("/payload"):
        return UnivariatePair(f, g)


def polynomial_system(doc: dict) -> DenseHomogeneousSystem:
    polys = [polynomial(q, f"/payload/polys/{k}") for k, q in enumerate(doc["payload"]["polys"])]
    with guard("/payload/polys"):
        return DenseHomogeneousSystem.from_polynomials(polys)


def payoff_tensor(doc: dict) -> PayoffTensor:
    p = doc["payload"]
    with guard("/payload/payoffs"):
        return PayoffTensor.from_nested(p["strategies"], p["payoffs"])


def bilinear_triple(doc: dict) -> BilinearTriple:
    if doc["kind"] == "payoff-tensor":
        tensor = payoff_tensor(doc)
        with guard("/payload/strategies"):
            return BilinearTriple.from_payoffs(tensor)
    p = doc["payload"]
    with guard("/payload"):
        return BilinearTriple(tuple(p["a"]), tuple(p["b"]), tuple(p["c"]))


def curve(doc: dict) -> ParametricPlaneCurve:
    p = doc["payload"]
    with guard("/payload"):
        return ParametricPlaneCurve.from_coeffs(p["x"], p["y"])


def polygons(doc: dict) -> tuple[ConvexPolygon, ConvexPolygon]:
    p = doc["payload"]
    return ConvexPolygon.hull(p["p"]), ConvexPolygon.hull(p["q"])


def support_set(text: str) -> SupportSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in support file: {exc}") from exc
    errors = list(jsonschema.Draft202012Validator(schema("support")).iter_errors(doc))
    if errors:
        raise DocumentError(errors[0].message, "support-file:" + _pointer(errors[0].absolute_path))
    with guard("support-file:/support"):
        return SupportSet(tuple(tuple(p) for p in doc["support"]))
