"""JSON documents for algebras, structures and reports.

Every document is an object with a ``kind`` field. Rationals are written as
strings ``"p/q"`` (integers as ``"n"``), never as floats. Indices in bracket
lists are 1-based. Example::

    {"kind": "lie_algebra", "dim": 3, "labels": ["e1", "e2", "e3"],
     "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DocumentError, LiecheckError
from .exact.matrix import Matrix
from .exact.scalars import format_rational
from .lie import LieAlgebra, Representation
from .notation import parse_images, parse_symmetric, parse_two_form

KINDS = ("lie_algebra", "acs", "two_form", "metric", "representation", "report")


@dataclass(frozen=True)
class Document:
    """``payload`` is a LieAlgebra, a Matrix, a Representation or a report dict."""

    kind: str
    payload: object


# scalars and matrices -------------------------------------------------------------


def rational_from_json(value, where="value"):
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{where}: {value!r} is not an exact rational; write it as a string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if not text or any(ch in text for ch in ".eE"):
                raise ValueError
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: {value!r} is not a rational literal") from None
    raise DocumentError(f"{where}: expected a rational string, got {type(value).__name__}")


def rational_to_json(q):
    return format_rational(q)


def matrix_from_json(rows, where="matrix", dim=None):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{where}: expected a non-empty list of rows")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DocumentError(f"{where}: rows have different lengths")
    if dim is not None and (len(rows), ncols) != (dim, dim):
        raise DocumentError(f"{where}: expected a {dim}x{dim} matrix")
    out = [
        [rational_from_json(c, f"{where}[{r}][{k}]") for k, c in enumerate(row)]
        for r, row in enumerate(rows)
    ]
    return Matrix(out, ncols)


def matrix_to_json(m):
    return [[rational_to_json(c) for c in row] for row in m.rows]


# per-kind payloads ----------------------------------------------------------------


def _require(obj, key, kind):
    if key not in obj:
        raise DocumentError(f"{kind} document is missing the field {key!r}")
    return obj[key]


def _dim(obj, kind):
    d = _require(obj, "dim", kind)
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise DocumentError(f"{kind}: dim must be a positive integer")
    return d


def _algebra_from_obj(obj, validate=True):
    dim = _dim(obj, "lie_algebra")
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim):
        raise DocumentError("lie_algebra: labels must be a list with one entry per basis element")
    table = {}
    for n, entry in enumerate(obj.get("brackets", [])):
        where = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: expected an object with i, j, k, c")
        try:
            i, j, k = (int(entry[x]) for x in "ijk")
        except (KeyError, TypeError, ValueError):
            raise DocumentError(f"{where}: i, j, k must be integers") from None
        if not (1 <= i < j <= dim and 1 <= k <= dim):
            raise DocumentError(f"{where}: need 1 <= i < j <= {dim} and 1 <= k <= {dim}")
        c = rational_from_json(entry.get("c", "1"), where + ".c")
        vec = table.setdefault((i - 1, j - 1), [Fraction(0)] * dim)
        if vec[k - 1]:
            raise DocumentError(f"{where}: duplicate coefficient for [e{i},e{j}] on e{k}")
        vec[k - 1] = c
    return LieAlgebra(dim, table, labels=labels, name=obj.get("name"), validate=validate)


def algebra_to_obj(g):
    obj = {"kind": "lie_algebra", "dim": g.dim, "labels": list(g.labels)}
    if g.name:
        obj["name"] = g.name
    obj["brackets"] = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "c": rational_to_json(c)}
        for i, j, v in g.table()
        for k, c in enumerate(v)
        if c
    ]
    return obj


def _square_from_obj(obj, kind):
    dim = _dim(obj, kind)
    if "matrix" in obj:
        return matrix_from_json(obj["matrix"], f"{kind}.matrix", dim)
    if kind == "acs" and "images" in obj:
        from .complex import complete_acs

        images = obj["images"]
        if isinstance(images, dict):
            images = ", ".join(f"J{k}={v}" for k, v in images.items())
        return complete_acs(dim, parse_images(images, dim))
    if kind in ("two_form", "metric") and "expression" in obj:
        parse = parse_two_form if kind == "two_form" else parse_symmetric
        return parse(obj["expression"], dim)
    raise DocumentError(f"{kind} document needs a 'matrix' field")


def _representation_from_obj(obj):
    source = _algebra_from_obj(_require(obj, "source", "representation"))
    space_dim = _dim({"dim": _require(obj, "space_dim", "representation")}, "representation")
    action = _require(obj, "action", "representation")
    if not isinstance(action, list) or len(action) != source.dim:
        raise DocumentError("representation: one action matrix per basis element is required")
    mats = [matrix_from_json(a, f"action[{n}]", space_dim) for n, a in enumerate(action)]
    return Representation(source, mats, space_dim, name=obj.get("name"))


def representation_to_obj(rep):
    obj = {
        "kind": "representation",
        "source": algebra_to_obj(rep.source),
        "space_dim": rep.space_dim,
        "action": [matrix_to_json(a) for a in rep.action],
    }
    if rep.name:
        obj["name"] = rep.name
    return obj


def _report_value(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return rational_to_json(v)
    if isinstance(v, Matrix):
        return matrix_to_json(v)
    if isinstance(v, dict):
        return {str(k): _report_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_report_value(x) for x in v]
    raise TypeError(f"cannot put {type(v).__name__} in a report")


# documents --------------------------------------------------------------------------


def from_object(obj, validate=True):
    if not isinstance(obj, dict):
        raise DocumentError("a document must be a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind == "lie_algebra":
            return Document(kind, _algebra_from_obj(obj, validate))
        if kind in ("acs", "two_form", "metric"):
            return Document(kind, _square_from_obj(obj, kind))
        if kind == "representation":
            return Document(kind, _representation_from_obj(obj))
    except LiecheckError:
        raise
    except (TypeError, ValueError, KeyError) as exc:
        raise DocumentError(f"{kind}: {exc}") from None
    return Document(kind, {k: v for k, v in obj.items() if k != "kind"})


def to_object(doc):
    kind, p = doc.kind, doc.payload
    if kind == "lie_algebra":
        return algebra_to_obj(p)
    if kind in ("acs", "two_form", "metric"):
        return {"kind": kind, "dim": p.nrows, "matrix": matrix_to_json(p)}
    if kind == "representation":
        return representation_to_obj(p)
    if kind == "report":
        return {"kind": "report", **_report_value(p)}
    raise DocumentError(f"unknown document kind {kind!r}")


def document_of(obj):
    """Wrap a library object (or a report dict) as a Document."""
    from .complex import AlmostComplexStructure
    from .symplectic import Metric, TwoForm

    if isinstance(obj, LieAlgebra):
        return Document("lie_algebra", obj)
    if isinstance(obj, AlmostComplexStructure):
        return Document("acs", obj.matrix)
    if isinstance(obj, TwoForm):
        return Document("two_form", obj.matrix)
    if isinstance(obj, Metric):
        return Document("metric", obj.matrix)
    if isinstance(obj, Representation):
        return Document("representation", obj)
    if isinstance(obj, dict):
        return Document("report", obj)
    raise TypeError(f"no document kind for {type(obj).__name__}")


def loads(text, validate=True):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return from_object(obj, validate)


def dumps(doc):
    if not isinstance(doc, Document):
        doc = document_of(doc)
    return json.dumps(to_object(doc), indent=2, ensure_ascii=False)


def read_document(path, kind=None, validate=True):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    doc = loads(text, validate)
    if kind is not None and doc.kind != kind:
        raise DocumentError(f"{path}: expected a {kind} document, found {doc.kind}")
    return doc


def write_document(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc) + "\n")
