"""Text documents for algebras, cocycles, actions and extensions.

Documents are a subset of TOML: string arrays for basis names and tables of
inline tables for maps.  Rationals are strings such as ``"-3/4"`` (plain
integers are also accepted).  Pair keys are written ``"x,y"``.  The mirror of
a supercommutative entry is derived, and an explicitly written mirror must
agree with it.  See docs/format.md for the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Mapping

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from .algebra import GradedMorphism, HomLieAntialgebra, StructureError, build
from .extensions import Action, CentralExtension, central_extension_from_cocycle, extension_from_projection
from .homology import Cocycle2
from .linalg import Matrix

RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")

Sparse = dict  # name -> Fraction


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


# ---------------------------------------------------------------------------
# Locating semantic errors in the source text

_HEADER = re.compile(r"^\s*\[\s*([^\[\]]+?)\s*\]\s*(#.*)?$")


def _header_path(raw: str) -> str:
    return ".".join(p.strip().strip('"').strip("'") for p in raw.split("."))


def _locate(text: str, table: str, key: str | None = None) -> tuple[int, int]:
    """Best line/column for ``key`` inside ``[table]`` ("" is the top level)."""
    current = ""
    header_pos = None
    for n, line in enumerate(text.splitlines(), 1):
        m = _HEADER.match(line)
        if m:
            current = _header_path(m.group(1))
            if current == table and header_pos is None:
                header_pos = (n, line.index("[") + 1)
            continue
        if current != table or key is None:
            continue
        stripped = line.lstrip()
        for form in (f'"{key}"', f"'{key}'", key):
            if stripped.startswith(form) and stripped[len(form):].lstrip().startswith("="):
                return n, len(line) - len(stripped) + 1
    if key is not None and "." in key:
        return _locate(text, table, key.split(".")[0])
    return header_pos or (1, 1)


class _Ctx:
    def __init__(self, text: str):
        self.text = text

    def fail(self, table: str, key: str | None, message: str):
        line, col = _locate(self.text, table, key)
        raise ParseError(line, col, message)


def _loads(text: str) -> dict:
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", None)
        col = getattr(exc, "colno", None)
        if line is None:
            m = re.search(r"at line (\d+), column (\d+)", str(exc))
            line, col = (int(m.group(1)), int(m.group(2))) if m else (1, 1)
        msg = getattr(exc, "msg", None) or re.sub(r"\s*\(at line.*\)$", "", str(exc))
        if "overwrite" in msg:
            msg = f"duplicate key ({msg})"
        raise ParseError(line, col, msg) from None


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and RATIONAL.match(value.strip()):
        f = value.strip()
        if "/" in f and int(f.split("/")[1]) == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(f)
    raise ValueError(f"malformed rational {value!r}")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# Algebra documents

ALGEBRA_KEYS = ("even", "odd", "alpha", "beta", "product_even_even", "product_even_odd",
                "bracket_odd_odd")
SPACE_KEYS = ("even", "odd", "alpha", "beta")


@dataclass
class AlgebraDocument:
    even: tuple[str, ...]
    odd: tuple[str, ...]
    alpha: dict[str, Sparse] | None = None
    beta: dict[str, Sparse] | None = None
    product_even_even: dict[tuple[str, str], Sparse] = field(default_factory=dict)
    product_even_odd: dict[tuple[str, str], Sparse] = field(default_factory=dict)
    bracket_odd_odd: dict[tuple[str, str], Sparse] = field(default_factory=dict)

    def to_algebra(self) -> HomLieAntialgebra:
        def norm(table, left, right):
            out = {}
            for (p, q), v in table.items():
                if p in left and q in right:
                    out[(p, q)] = v
                else:  # odd,even spelling of an even-odd product
                    out[(q, p)] = v
            return out
        return build(self.even, self.odd, alpha=self.alpha, beta=self.beta,
                     even_even=self.product_even_even,
                     even_odd=norm(self.product_even_odd, set(self.even), set(self.odd)),
                     odd_odd=self.bracket_odd_odd)

    @classmethod
    def from_algebra(cls, A: HomLieAntialgebra) -> "AlgebraDocument":
        def sparse(names, v):
            return {n: c for n, c in zip(names, v) if c}

        def twist(m: Matrix, names):
            return {names[j]: sparse(names, m.column(j)) for j in range(len(names))}

        ee = {}
        for i in range(A.d0):
            for j in range(i, A.d0):
                if any(A.c00[i][j]):
                    ee[(A.even[i], A.even[j])] = sparse(A.even, A.c00[i][j])
        eo = {}
        for i in range(A.d0):
            for j in range(A.d1):
                if any(A.c01[i][j]):
                    eo[(A.even[i], A.odd[j])] = sparse(A.odd, A.c01[i][j])
        oo = {}
        for i in range(A.d1):
            for j in range(i + 1, A.d1):
                if any(A.c11[i][j]):
                    oo[(A.odd[i], A.odd[j])] = sparse(A.even, A.c11[i][j])
        return cls(tuple(A.even), tuple(A.odd), twist(A.alpha, A.even), twist(A.beta, A.odd),
                   ee, eo, oo)


def _names(ctx: _Ctx, d: dict, key: str, table: str) -> tuple[str, ...]:
    value = d.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        ctx.fail(table, key, f"{key} must be an array of strings")
    for v in value:
        if not v or v != v.strip():
            ctx.fail(table, key, f"invalid basis name {v!r} (must be non-empty without outer spaces)")
    return tuple(value)


def _sparse(ctx: _Ctx, table: str, key: str, value: Any, allowed: tuple[str, ...]) -> Sparse:
    if not isinstance(value, dict):
        ctx.fail(table, key, f"value of {key!r} must be a table of name = rational")
    out = {}
    for name, c in value.items():
        if name not in allowed:
            ctx.fail(table, key, f"undeclared basis name {name!r} in {key!r}")
        try:
            r = parse_rational(c)
        except ValueError as exc:
            ctx.fail(table, key, str(exc))
        if r:
            out[name] = r
    return out


def _split_pair(ctx: _Ctx, table: str, key: str, names: set[str]) -> tuple[str, str]:
    hits = []
    for k, ch in enumerate(key):
        if ch == ",":
            p, q = key[:k].strip(), key[k + 1:].strip()
            if p in names and q in names:
                hits.append((p, q))
    if len(hits) != 1:
        ctx.fail(table, key, f"pair key {key!r} must be 'name,name' with declared names")
    return hits[0]


def _twist_table(ctx, d, key, table, names) -> dict[str, Sparse] | None:
    if key not in d:
        return None
    value = d[key]
    path = f"{table}.{key}" if table else key
    if not isinstance(value, dict):
        ctx.fail(table, key, f"{key} must be a table")
    out = {}
    for src, img in value.items():
        if src not in names:
            ctx.fail(path, src, f"undeclared basis name {src!r} in {key}")
        out[src] = _sparse(ctx, path, src, img, names)
    return out


def _pair_table(ctx, d, key, table, left, right, out_names, mirror_sign):
    value = d.get(key, {})
    path = f"{table}.{key}" if table else key
    if not isinstance(value, dict):
        ctx.fail(table, key, f"{key} must be a table")
    lset, rset = set(left), set(right)
    out: dict = {}
    canon: dict = {}
    for raw, img in value.items():
        p, q = _split_pair(ctx, path, raw, lset | rset)
        if not ((p in lset and q in rset) or (mirror_sign is not None and p in rset and q in lset)):
            ctx.fail(path, raw, f"pair {raw!r} has the wrong parity for {key}")
        vec = _sparse(ctx, path, raw, img, out_names)
        if (p, q) in out:
            ctx.fail(path, raw, f"duplicate key {raw!r}")
        # canonical orientation for the mirror check
        if lset == rset:
            c_key = (p, q) if left.index(p) <= left.index(q) else (q, p)
            sign = 1 if c_key == (p, q) else mirror_sign
        else:
            c_key = (p, q) if p in lset else (q, p)
            sign = 1
        if lset == rset and p == q and mirror_sign == -1 and vec:
            ctx.fail(path, raw, f"symmetry contradiction: [{p},{p}] must be 0")
        signed = {n: sign * c for n, c in vec.items()}
        if c_key in canon and canon[c_key] != signed:
            ctx.fail(path, raw, f"symmetry contradiction: {raw!r} disagrees with its mirror entry")
        canon[c_key] = signed
        out[(p, q)] = vec
    return out


def _algebra_from_dict(ctx: _Ctx, d: dict, table: str = "",
                       keys: tuple[str, ...] = ALGEBRA_KEYS) -> AlgebraDocument:
    if not isinstance(d, dict):
        ctx.fail(table, None, f"{table or 'document'} must be a table")
    for k in d:
        if k not in keys:
            ctx.fail(table, k, f"unknown key {k!r}")
    even = _names(ctx, d, "even", table)
    odd = _names(ctx, d, "odd", table)
    if len(set(even + odd)) != len(even + odd):
        ctx.fail(table, "even", "basis names must be unique")
    doc = AlgebraDocument(
        even, odd,
        alpha=_twist_table(ctx, d, "alpha", table, even),
        beta=_twist_table(ctx, d, "beta", table, odd),
        product_even_even=_pair_table(ctx, d, "product_even_even", table, even, even, even, 1),
        product_even_odd=_pair_table(ctx, d, "product_even_odd", table, even, odd, odd, 1),
        bracket_odd_odd=_pair_table(ctx, d, "bracket_odd_odd", table, odd, odd, even, -1),
    )
    try:
        doc.to_algebra()
    except StructureError as exc:
        ctx.fail(table, None, str(exc))
    return doc


def parse_algebra(text: str) -> AlgebraDocument:
    ctx = _Ctx(text)
    return _algebra_from_dict(ctx, _loads(text))


# ---------------------------------------------------------------------------
# Emission

def _q(s: str) -> str:
    out = s.replace("\\", "\\\\").replace('"', '\\"')
    out = "".join(ch if ch >= " " else f"\\u{ord(ch):04x}" for ch in out)
    return f'"{out}"'


def _inline(sparse: Mapping[str, Fraction]) -> str:
    if not sparse:
        return "{}"
    return "{ " + ", ".join(f"{_q(n)} = {_q(format_rational(c))}" for n, c in sparse.items()) + " }"


def _emit_algebra(doc: AlgebraDocument, prefix: str = "", space_only: bool = False) -> list[str]:
    lines = []
    if prefix:
        lines.append(f"[{prefix}]")
    lines.append("even = [" + ", ".join(_q(n) for n in doc.even) + "]")
    lines.append("odd = [" + ", ".join(_q(n) for n in doc.odd) + "]")
    dot = f"{prefix}." if prefix else ""
    for key in ("alpha", "beta"):
        table = getattr(doc, key)
        if table is None:
            continue
        lines += ["", f"[{dot}{key}]"]
        lines += [f"{_q(n)} = {_inline(v)}" for n, v in table.items()]
    if space_only:
        return lines
    for key in ("product_even_even", "product_even_odd", "bracket_odd_odd"):
        table = getattr(doc, key)
        if not table:
            continue
        lines += ["", f"[{dot}{key}]"]
        lines += [f"{_q(p + ',' + q)} = {_inline(v)}" for (p, q), v in table.items()]
    return lines


def emit_algebra(doc: AlgebraDocument | HomLieAntialgebra) -> str:
    if isinstance(doc, HomLieAntialgebra):
        doc = AlgebraDocument.from_algebra(doc)
    return "\n".join(_emit_algebra(doc)) + "\n"


# ---------------------------------------------------------------------------
# Cocycle documents

@dataclass
class CocycleDocument:
    coefficients: AlgebraDocument
    omega0: dict[tuple[str, str], Sparse] = field(default_factory=dict)
    omega1: dict[tuple[str, str], Sparse] = field(default_factory=dict)
    omega2: dict[tuple[str, str], Sparse] = field(default_factory=dict)

    def to_cocycle(self, base: HomLieAntialgebra) -> Cocycle2:
        V = self.coefficients.to_algebra()
        w = Cocycle2.zero(base, V)
        ie = {n: i for i, n in enumerate(base.even)}
        io = {n: i for i, n in enumerate(base.odd)}

        def vec(sparse, names):
            return tuple(sparse.get(n, Fraction(0)) for n in names)

        for (p, q), v in self.omega0.items():
            w = w.with_entry(0, ie[p], ie[q], vec(v, V.even))
        for (p, q), v in self.omega1.items():
            if p in io:
                p, q = q, p
            w = w.with_entry(1, ie[p], io[q], vec(v, V.odd))
        for (p, q), v in self.omega2.items():
            w = w.with_entry(2, io[p], io[q], vec(v, V.even))
        return w

    @classmethod
    def from_cocycle(cls, base: HomLieAntialgebra, w: Cocycle2) -> "CocycleDocument":
        V = w.coefficients

        def sparse(names, v):
            return {n: c for n, c in zip(names, v) if c}

        o0 = {(base.even[i], base.even[j]): sparse(V.even, w.w0[i][j])
              for i in range(base.d0) for j in range(i, base.d0) if any(w.w0[i][j])}
        o1 = {(base.even[i], base.odd[j]): sparse(V.odd, w.w1[i][j])
              for i in range(base.d0) for j in range(base.d1) if any(w.w1[i][j])}
        o2 = {(base.odd[i], base.odd[j]): sparse(V.even, w.w2[i][j])
              for i in range(base.d1) for j in range(i + 1, base.d1) if any(w.w2[i][j])}
        return cls(AlgebraDocument.from_algebra(V), o0, o1, o2)


COCYCLE_KEYS = ("coefficients", "omega0", "omega1", "omega2")


def _cocycle_from_dict(ctx: _Ctx, d: dict, base: HomLieAntialgebra, prefix: str = "") -> CocycleDocument:
    dot = f"{prefix}." if prefix else ""
    if "coefficients" not in d:
        ctx.fail(prefix, None, "missing [coefficients] table")
    V = _algebra_from_dict(ctx, d["coefficients"], f"{dot}coefficients", SPACE_KEYS)
    clash = set(V.even + V.odd) & set(base.even + base.odd)
    if clash:
        ctx.fail(f"{dot}coefficients", "even",
                 f"coefficient names clash with the base: {', '.join(sorted(clash))}")
    return CocycleDocument(
        V,
        _pair_table(ctx, d, "omega0", prefix, base.even, base.even, V.even, 1),
        _pair_table(ctx, d, "omega1", prefix, base.even, base.odd, V.odd, 1),
        _pair_table(ctx, d, "omega2", prefix, base.odd, base.odd, V.even, -1),
    )


def parse_cocycle(text: str, base: HomLieAntialgebra) -> CocycleDocument:
    ctx = _Ctx(text)
    d = _loads(text)
    for k in d:
        if k not in COCYCLE_KEYS:
            ctx.fail("", k, f"unknown key {k!r}")
    return _cocycle_from_dict(ctx, d, base)


def _emit_cocycle(doc: CocycleDocument, prefix: str = "") -> list[str]:
    dot = f"{prefix}." if prefix else ""
    lines = _emit_algebra(doc.coefficients, f"{dot}coefficients", space_only=True)
    for key in ("omega0", "omega1", "omega2"):
        table = getattr(doc, key)
        lines += ["", f"[{dot}{key}]"]
        lines += [f"{_q(p + ',' + q)} = {_inline(v)}" for (p, q), v in table.items()]
    return lines


def emit_cocycle(doc: CocycleDocument) -> str:
    return "\n".join(_emit_cocycle(doc)) + "\n"


# ---------------------------------------------------------------------------
# Action documents

@dataclass
class ActionDocument:
    module: AlgebraDocument
    rho: dict[tuple[str, str], Sparse] = field(default_factory=dict)

    def to_action(self, base: HomLieAntialgebra) -> tuple[HomLieAntialgebra, Action]:
        V = self.module.to_algebra()
        ie = {n: i for i, n in enumerate(base.even)}
        ve = {n: i for i, n in enumerate(V.even)}
        rho0 = [[[[Fraction(0)] * V.d0 for _ in range(V.d0)], [[Fraction(0)] * V.d1 for _ in range(V.d1)]]
                for _ in range(base.d0)]
        rho1 = [[[[Fraction(0)] * V.d0 for _ in range(V.d1)], [[Fraction(0)] * V.d1 for _ in range(V.d0)]]
                for _ in range(base.d1)]
        for (x, t), img in self.rho.items():
            x_even, t_even = x in ie, t in ve
            xi = base.even.index(x) if x_even else base.odd.index(x)
            ti = V.even.index(t) if t_even else V.odd.index(t)
            names = V.even if x_even == t_even else V.odd
            col = [img.get(n, Fraction(0)) for n in names]
            table = rho0 if x_even else rho1
            which = 0 if t_even else 1
            m = table[xi][which]
            for r, c in enumerate(col):
                m[r][ti] = c
        action = Action(
            tuple((Matrix(a, V.d0), Matrix(b, V.d1)) for a, b in rho0),
            tuple((Matrix(a, V.d0), Matrix(b, V.d1)) for a, b in rho1))
        return V, action

    @classmethod
    def from_action(cls, base: HomLieAntialgebra, V: HomLieAntialgebra, rho: Action) -> "ActionDocument":
        out = {}
        for i, (m0, m1) in enumerate(rho.rho0):
            for j in range(V.d0):
                col = {n: c for n, c in zip(V.even, m0.column(j)) if c}
                if col:
                    out[(base.even[i], V.even[j])] = col
            for j in range(V.d1):
                col = {n: c for n, c in zip(V.odd, m1.column(j)) if c}
                if col:
                    out[(base.even[i], V.odd[j])] = col
        for i, (m0, m1) in enumerate(rho.rho1):
            for j in range(V.d0):
                col = {n: c for n, c in zip(V.odd, m0.column(j)) if c}
                if col:
                    out[(base.odd[i], V.even[j])] = col
            for j in range(V.d1):
                col = {n: c for n, c in zip(V.even, m1.column(j)) if c}
                if col:
                    out[(base.odd[i], V.odd[j])] = col
        return cls(AlgebraDocument.from_algebra(V), out)


def parse_action(text: str, base: HomLieAntialgebra) -> ActionDocument:
    ctx = _Ctx(text)
    d = _loads(text)
    for k in d:
        if k not in ("module", "rho"):
            ctx.fail("", k, f"unknown key {k!r}")
    if "module" not in d:
        ctx.fail("", None, "missing [module] table")
    V = _algebra_from_dict(ctx, d["module"], "module")
    clash = set(V.even + V.odd) & set(base.even + base.odd)
    if clash:
        ctx.fail("module", "even", f"module names clash with the base: {', '.join(sorted(clash))}")
    rho_raw = d.get("rho", {})
    if not isinstance(rho_raw, dict):
        ctx.fail("", "rho", "rho must be a table")
    base_names = set(base.even + base.odd)
    v_names = set(V.even + V.odd)
    rho = {}
    for raw, img in rho_raw.items():
        x, t = _split_pair(ctx, "rho", raw, base_names | v_names)
        if x not in base_names or t not in v_names:
            ctx.fail("rho", raw, f"rho key {raw!r} must be 'base element,module element'")
        if (x, t) in rho:
            ctx.fail("rho", raw, f"duplicate key {raw!r}")
        out_names = V.even if ((x in base.even) == (t in V.even)) else V.odd
        rho[(x, t)] = _sparse(ctx, "rho", raw, img, out_names)
    return ActionDocument(V, rho)


def emit_action(doc: ActionDocument) -> str:
    lines = _emit_algebra(doc.module, "module")
    lines += ["", "[rho]"]
    lines += [f"{_q(x + ',' + t)} = {_inline(v)}" for (x, t), v in doc.rho.items()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Extension bundles

@dataclass
class ExtensionDocument:
    """A base algebra with either a cocycle or a total algebra and projection."""

    base: AlgebraDocument
    cocycle: CocycleDocument | None = None
    total: AlgebraDocument | None = None
    projection: dict[str, Sparse] | None = None

    def to_extension(self) -> CentralExtension:
        A = self.base.to_algebra()
        if self.cocycle is not None:
            return central_extension_from_cocycle(A, self.cocycle.to_cocycle(A))
        T = self.total.to_algebra()

        def block(src, dst):
            cols = [[self.projection.get(s, {}).get(n, Fraction(0)) for n in dst] for s in src]
            return Matrix.from_columns(cols, len(dst))

        pi = GradedMorphism(T, A, block(T.even, A.even), block(T.odd, A.odd))
        return extension_from_projection(A, T, pi)


def parse_extension(text: str) -> ExtensionDocument:
    ctx = _Ctx(text)
    d = _loads(text)
    for k in d:
        if k not in ("base", "cocycle", "total", "projection"):
            ctx.fail("", k, f"unknown key {k!r}")
    if "base" not in d:
        ctx.fail("", None, "missing [base] table")
    base = _algebra_from_dict(ctx, d["base"], "base")
    A = base.to_algebra()
    if ("cocycle" in d) == ("total" in d):
        ctx.fail("", None, "give exactly one of [cocycle] or [total] with [projection]")
    if "cocycle" in d:
        c = d["cocycle"]
        for k in c:
            if k not in COCYCLE_KEYS:
                ctx.fail("cocycle", k, f"unknown key {k!r}")
        return ExtensionDocument(base, cocycle=_cocycle_from_dict(ctx, c, A, "cocycle"))
    total = _algebra_from_dict(ctx, d["total"], "total")
    if "projection" not in d:
        ctx.fail("", None, "missing [projection] table")
    raw = d["projection"]
    if not isinstance(raw, dict):
        ctx.fail("", "projection", "projection must be a table")
    proj = {}
    for src, img in raw.items():
        if src in total.even:
            proj[src] = _sparse(ctx, "projection", src, img, base.even)
        elif src in total.odd:
            proj[src] = _sparse(ctx, "projection", src, img, base.odd)
        else:
            ctx.fail("projection", src, f"undeclared basis name {src!r} in projection")
    return ExtensionDocument(base, total=total, projection=proj)


def emit_extension(doc: ExtensionDocument) -> str:
    lines = _emit_algebra(doc.base, "base")
    if doc.cocycle is not None:
        lines += [""] + _emit_cocycle(doc.cocycle, "cocycle")
    else:
        lines += [""] + _emit_algebra(doc.total, "total")
        lines += ["", "[projection]"]
        lines += [f"{_q(n)} = {_inline(v)}" for n, v in doc.projection.items()]
    return "\n".join(lines) + "\n"


def extension_document(E: CentralExtension) -> ExtensionDocument:
    """Bundle an extension as base + total + projection."""
    T, A, p = E.total, E.base, E.projection
    proj = {}
    for j, n in enumerate(T.even):
        proj[n] = {m: c for m, c in zip(A.even, p.f0.column(j)) if c}
    for j, n in enumerate(T.odd):
        proj[n] = {m: c for m, c in zip(A.odd, p.f1.column(j)) if c}
    return ExtensionDocument(AlgebraDocument.from_algebra(A), total=AlgebraDocument.from_algebra(T),
                             projection=proj)


def shipped_documents() -> dict[str, str]:
    """File name -> text of the example documents installed with the package."""
    root = resources.files("antialgebra") / "data"
    return {p.name: p.read_text(encoding="utf-8")
            for p in sorted(root.iterdir(), key=lambda p: p.name) if p.name.endswith(".toml")}

__all__ = [
    "ParseError", "AlgebraDocument", "parse_algebra", "emit_algebra", "CocycleDocument",
    "parse_cocycle", "emit_cocycle", "ActionDocument", "parse_action", "emit_action",
    "ExtensionDocument", "parse_extension", "emit_extension", "extension_document",
    "parse_rational", "format_rational", "shipped_documents",
]
