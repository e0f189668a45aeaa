"""JSON document schema for bundles, representations, maps, forms and reports.

One document describes a full scenario:

    {
      "schema_version": 1,
      "dim": 4,
      "basis": ["e1", "e2", "e3", "e4"],
      "unit": 0,                                        # optional basis index
      "product":        [{"indices": [i,j,k],   "value": "1"}, ...],
      "bracket":        [{"indices": [i,j,k,l], "value": "1"}, ...],
      "binary_bracket": [{"indices": [i,j,k],   "value": "-2"}, ...],
      "rep": {"module_dim": m,
              "mu":  [{"index": i,       "matrix": [["0","1"],["0","0"]]}, ...],
              "rho": [{"indices": [i,j], "matrix": [[...]]}, ...]},
      "maps": [{"name": "T", "matrix": [[...]]}, ...],
      "form": {"matrix": [[...]]}
    }

Indices are 0-based.  Scalars are exact rationals written as strings
("3", "-3/2"); bare JSON integers are accepted on input.  Sparse entry lists
carry only nonzero entries; a key that is present (even as an empty list)
means the tensor exists and unlisted entries are zero, while an absent key
means the bundle does not carry that tensor.  Serialization is canonical
(entries sorted by indices, scalars always strings), so serialize-parse
round trips are byte identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .constructions import TraceFunctional
from .errors import SchemaError
from .linalg import InterMap, Matrix, Tensor3, Tensor4, Vec
from .operators import BilinearForm
from .representations import BiRep, LinRep, RepBundle
from .structures import AlgebraBundle, CheckReport

SCHEMA_VERSION = 1


@dataclass
class Document:
    """A parsed scenario: one bundle plus optional representation, maps, form."""

    bundle: AlgebraBundle
    rep: Optional[RepBundle] = None
    maps: dict[str, InterMap] = field(default_factory=dict)
    form: Optional[BilinearForm] = None

    def require_rep(self) -> RepBundle:
        if self.rep is None:
            raise SchemaError("document has no 'rep' block")
        return self.rep

    def require_map(self, *names: str) -> InterMap:
        for name in names:
            if name in self.maps:
                return self.maps[name]
        raise SchemaError(f"document has no map named {' or '.join(repr(n) for n in names)}")

    def require_form(self) -> BilinearForm:
        if self.form is None:
            raise SchemaError("document has no 'form' block")
        return self.form

    def trace(self) -> TraceFunctional:
        tau = self.require_map("tau")
        if tau.dst_dim != 1:
            raise SchemaError("map 'tau' must have a 1-row matrix (a functional)")
        return TraceFunctional(tau.matrix.row(0))


def _parse_scalar(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"{where}: booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: cannot parse rational {x!r}: {exc}") from None
    raise SchemaError(
        f"{where}: scalars must be integers or 'p/q' strings, got {type(x).__name__}"
    )


def _fmt_scalar(v: Fraction) -> str:
    return str(v)


def _parse_indices(entry, where: str, count: int, dim: int) -> tuple[int, ...]:
    idx = entry.get("indices")
    if not isinstance(idx, list) or len(idx) != count:
        raise SchemaError(f"{where}.indices: expected a list of {count} integers")
    out = []
    for pos, i in enumerate(idx):
        if not isinstance(i, int) or isinstance(i, bool):
            raise SchemaError(f"{where}.indices[{pos}]: expected an integer")
        if not 0 <= i < dim:
            raise SchemaError(
                f"{where}.indices[{pos}]: index {i} out of range for dim {dim}"
            )
        out.append(i)
    return tuple(out)


def _parse_sparse(raw, where: str, count: int, dim: int) -> dict[tuple[int, ...], Fraction]:
    if not isinstance(raw, list):
        raise SchemaError(f"{where}: expected a list of {{indices, value}} entries")
    entries: dict[tuple[int, ...], Fraction] = {}
    for pos, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}[{pos}]: expected an object")
        idx = _parse_indices(entry, f"{where}[{pos}]", count, dim)
        if idx in entries:
            raise SchemaError(f"{where}[{pos}]: duplicate indices {list(idx)}")
        entries[idx] = _parse_scalar(entry.get("value"), f"{where}[{pos}].value")
    return entries


def _complete_skew(entries: dict[tuple[int, ...], Fraction], count: int,
                   where: str) -> tuple[dict[tuple[int, ...], Fraction], int]:
    """Fill absent orientations of the first `count` slots by alternation."""
    from itertools import permutations

    out = dict(entries)
    filled = 0
    for idx, v in entries.items():
        head, tail = idx[:count], idx[count:]
        for perm in permutations(range(count)):
            sign = 1
            lst = list(perm)
            for a in range(count):
                for b in range(a + 1, count):
                    if lst[a] > lst[b]:
                        sign = -sign
            new = tuple(head[p] for p in perm) + tail
            val = sign * v
            if new in entries:
                if entries[new] != val:
                    raise SchemaError(
                        f"{where}: entries at {list(idx)} and {list(new)} conflict "
                        "under skew-symmetric completion"
                    )
            elif new in out:
                if out[new] != val:
                    raise SchemaError(
                        f"{where}: completion of {list(idx)} conflicts at {list(new)}"
                    )
            else:
                out[new] = val
                filled += 1
    return out, filled


def _parse_matrix(raw, where: str, rows: int, cols: int) -> Matrix:
    if not isinstance(raw, list) or len(raw) != rows:
        raise SchemaError(f"{where}: expected {rows} rows")
    grid = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"{where}[{i}]: expected {cols} entries")
        grid.append([_parse_scalar(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(grid)


def parse_document(data, *, complete_skew: bool = False) -> tuple[Document, int]:
    """Parse a JSON document (text or loaded object) into a Document.

    Returns the document and the number of entries filled in by the optional
    skew-symmetric completion (0 when the flag is off).
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaError("document root must be an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError(f"dim: expected a positive integer, got {dim!r}")
    basis = data.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim or not all(
            isinstance(s, str) for s in basis
        ):
            raise SchemaError(f"basis: expected a list of {dim} strings")
        basis = tuple(basis)

    filled = 0
    product = bracket = binary_bracket = None
    if "product" in data:
        entries = _parse_sparse(data["product"], "product", 3, dim)
        product = Tensor3.from_nonzeros(dim, entries)
    if "bracket" in data:
        entries = _parse_sparse(data["bracket"], "bracket", 4, dim)
        if complete_skew:
            entries, f = _complete_skew(entries, 3, "bracket")
            filled += f
        bracket = Tensor4.from_nonzeros(dim, entries)
    if "binary_bracket" in data:
        entries = _parse_sparse(data["binary_bracket"], "binary_bracket", 3, dim)
        if complete_skew:
            entries, f = _complete_skew(entries, 2, "binary_bracket")
            filled += f
        binary_bracket = Tensor3.from_nonzeros(dim, entries)

    unit = None
    if "unit" in data:
        u = data["unit"]
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < dim:
            raise SchemaError(f"unit: expected a basis index in [0, {dim}), got {u!r}")
        unit = Vec.basis(dim, u)

    try:
        bundle = AlgebraBundle(
            dim, product=product, bracket=bracket, binary_bracket=binary_bracket,
            unit=unit, basis_labels=basis,
        )
    except Exception as exc:
        raise SchemaError(f"bundle: {exc}") from None

    rep = None
    if "rep" in data:
        raw = data["rep"]
        if not isinstance(raw, dict):
            raise SchemaError("rep: expected an object")
        m = raw.get("module_dim")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise SchemaError(f"rep.module_dim: expected a positive integer, got {m!r}")
        mu = rho = None
        if "mu" in raw:
            mats = [Matrix.zero(m, m)] * dim
            seen = set()
            if not isinstance(raw["mu"], list):
                raise SchemaError("rep.mu: expected a list")
            for pos, entry in enumerate(raw["mu"]):
                if not isinstance(entry, dict):
                    raise SchemaError(f"rep.mu[{pos}]: expected an object")
                i = entry.get("index")
                if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < dim:
                    raise SchemaError(f"rep.mu[{pos}].index: out of range for dim {dim}")
                if i in seen:
                    raise SchemaError(f"rep.mu[{pos}]: duplicate index {i}")
                seen.add(i)
                mats[i] = _parse_matrix(entry.get("matrix"), f"rep.mu[{pos}].matrix", m, m)
            mu = LinRep(m, tuple(mats))
        if "rho" in raw:
            grid = [[Matrix.zero(m, m)] * dim for _ in range(dim)]
            seen = set()
            if not isinstance(raw["rho"], list):
                raise SchemaError("rep.rho: expected a list")
            for pos, entry in enumerate(raw["rho"]):
                if not isinstance(entry, dict):
                    raise SchemaError(f"rep.rho[{pos}]: expected an object")
                idx = _parse_indices(entry, f"rep.rho[{pos}]", 2, dim)
                if idx in seen:
                    raise SchemaError(f"rep.rho[{pos}]: duplicate indices {list(idx)}")
                seen.add(idx)
                grid[idx[0]][idx[1]] = _parse_matrix(
                    entry.get("matrix"), f"rep.rho[{pos}].matrix", m, m
                )
            rho = BiRep(m, tuple(tuple(row) for row in grid))
        try:
            rep = RepBundle(algebra=bundle, rho=rho, mu=mu)
        except Exception as exc:
            raise SchemaError(f"rep: {exc}") from None

    maps: dict[str, InterMap] = {}
    if "maps" in data:
        if not isinstance(data["maps"], list):
            raise SchemaError("maps: expected a list")
        for pos, entry in enumerate(data["maps"]):
            if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
                raise SchemaError(f"maps[{pos}]: expected an object with a 'name'")
            name = entry["name"]
            if name in maps:
                raise SchemaError(f"maps[{pos}]: duplicate map name {name!r}")
            raw_m = entry.get("matrix")
            if not isinstance(raw_m, list) or not raw_m or not isinstance(raw_m[0], list):
                raise SchemaError(f"maps[{pos}].matrix: expected a nested list")
            rows = len(raw_m)
            cols = len(raw_m[0])
            maps[name] = InterMap(_parse_matrix(raw_m, f"maps[{pos}].matrix", rows, cols))

    form = None
    if "form" in data:
        raw = data["form"]
        if not isinstance(raw, dict):
            raise SchemaError("form: expected an object")
        form = BilinearForm(_parse_matrix(raw.get("matrix"), "form.matrix", dim, dim))

    return Document(bundle=bundle, rep=rep, maps=maps, form=form), filled


def load_document(path, *, complete_skew: bool = False) -> tuple[Document, int]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    return parse_document(text, complete_skew=complete_skew)


# ---------------------------------------------------------------------------
# serialization


def _sparse_out(nonzeros) -> list:
    return [
        {"indices": list(idx), "value": _fmt_scalar(v)}
        for idx, v in sorted(nonzeros)
    ]


def _matrix_out(m: Matrix) -> list:
    return [[_fmt_scalar(v) for v in row] for row in m.entries]


def document_to_obj(bundle: AlgebraBundle, rep: Optional[RepBundle] = None,
                    maps: Optional[dict[str, InterMap]] = None,
                    form: Optional[BilinearForm] = None) -> dict:
    """Canonical JSON object for a scenario; only basis-vector units serialize."""
    out: dict = {"schema_version": SCHEMA_VERSION, "dim": bundle.dim,
                 "basis": list(bundle.basis_labels)}
    if bundle.unit is not None:
        ones = [i for i, v in enumerate(bundle.unit.entries) if v]
        if len(ones) == 1 and bundle.unit[ones[0]] == 1:
            out["unit"] = ones[0]
    if bundle.product is not None:
        out["product"] = _sparse_out(bundle.product.nonzeros())
    if bundle.bracket is not None:
        out["bracket"] = _sparse_out(bundle.bracket.nonzeros())
    if bundle.binary_bracket is not None:
        out["binary_bracket"] = _sparse_out(bundle.binary_bracket.nonzeros())
    if rep is not None:
        block: dict = {"module_dim": rep.module_dim}
        if rep.mu is not None:
            block["mu"] = [
                {"index": i, "matrix": _matrix_out(m)}
                for i, m in enumerate(rep.mu.mats)
                if not m.is_zero()
            ]
        if rep.rho is not None:
            if isinstance(rep.rho, BiRep):
                block["rho"] = [
                    {"indices": [i, j], "matrix": _matrix_out(m)}
                    for i, row in enumerate(rep.rho.mats)
                    for j, m in enumerate(row)
                    if not m.is_zero()
                ]
            else:
                raise SchemaError("only pair actions (BiRep) serialize in the rep block")
        out["rep"] = block
    if maps:
        out["maps"] = [
            {"name": name, "matrix": _matrix_out(maps[name].matrix)}
            for name in sorted(maps)
        ]
    if form is not None:
        out["form"] = {"matrix": _matrix_out(form.matrix)}
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_to_obj(report: CheckReport, timing_ms: Optional[float] = None) -> dict:
    out: dict = {
        "schema_version": SCHEMA_VERSION,
        "kind": report.kind,
        "verdict": report.verdict,
        "checked_identities": list(report.checked_identities),
        "tuple_count": report.tuple_count,
        "counterexamples": [
            {
                "identity": ce.identity,
                "indices": list(ce.indices),
                "residual": [_fmt_scalar(v) for v in ce.residual.entries],
            }
            for ce in report.counterexamples
        ],
    }
    if timing_ms is not None:
        out["timing_ms"] = timing_ms
    return out
