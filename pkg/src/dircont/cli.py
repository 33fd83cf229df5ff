"""Command line front end over a small JSON interchange format.

Every file is one JSON object with a "kind" field: container, dcont, cat,
morphism, preop or ominus.  Table keys pack tuples with "|", which is
reserved and may not appear in element names.  Emission is canonical
(sorted keys, two-space indent), so identical invocations are
byte-identical and emitted files reparse to structurally equal objects.

Exit codes: 0 all checks passed or output produced, 1 law violations or a
negative search result on well formed input, 2 parse or usage errors.
Violations print one per line as "LAW var=value ... lhs=... rhs=...".
"""

import argparse
import json
import sys

from .core import (Container, ContMorphism, DContMorphism, DirectedContainer, FinSet,
                   NotLawfulError, StructureError, check_cont_morphism,
                   check_dcont_laws, check_dcont_morphism, validate_container)
from .category import (PreOpMorphism, SmallCat, cat_to_dcont, check_cat_laws,
                       check_preop_morphism, dcont_to_cat)
from .constructions import (OminusMap, coproduct_cat, coproduct_dcont,
                            groupoid_inverse_search, opposite_cat, opposite_dcont,
                            tensor_cat, tensor_dcont)
from .interp import (check_comonad_laws, check_comonad_morphism, default_labels,
                     enum_nat_trans, nat_trans_oracle_count)
from .enumerate import DEFAULT_BUDGET, enum_structures, quotient_by_iso
from .examples import make_example
from .constructions import is_groupoid

SEP = "|"

_KIND_KEYS = {
    "container": {"kind", "shapes", "positions"},
    "dcont": {"kind", "shapes", "positions", "down", "root", "plus"},
    "cat": {"kind", "objects", "arrows", "src", "tgt", "ident", "comp"},
    "morphism": {"kind", "t", "q"},
    "preop": {"kind", "t", "q"},
    "ominus": {"kind", "ominus"},
}


class ParseError(StructureError):
    pass


def _need(cond, code, message):
    if not cond:
        raise ParseError(code, message)


def _str_list(doc, key):
    v = doc.get(key, [])
    _need(isinstance(v, list) and all(isinstance(x, str) for x in v),
          "parse-error", f"{key} must be a list of strings")
    for x in v:
        _need(SEP not in x, "parse-error", f"element name {x!r} contains reserved {SEP!r}")
    return tuple(v)


def _str_table(doc, key, arity):
    v = doc.get(key, {})
    _need(isinstance(v, dict), "parse-error", f"{key} must be an object")
    out = {}
    for k, val in v.items():
        _need(isinstance(k, str) and isinstance(val, str),
              "parse-error", f"{key} entries must map strings to strings")
        parts = tuple(k.split(SEP))
        _need(len(parts) == arity,
              "parse-error", f"{key} key {k!r} must have {arity} {SEP!r}-separated parts")
        out[parts if arity > 1 else parts[0]] = val
    return out


def _declared(name, pool, where):
    _need(name in pool, "unknown-reference", f"{where} references undeclared name {name!r}")


def parse_doc(doc):
    _need(isinstance(doc, dict), "parse-error", "top level must be an object")
    kind = doc.get("kind")
    _need(kind in _KIND_KEYS, "parse-error", f"unknown kind {kind!r}")
    extra = set(doc) - _KIND_KEYS[kind]
    _need(not extra, "unknown-key", f"unknown keys for {kind}: {sorted(extra)}")

    if kind in ("container", "dcont"):
        shapes = FinSet(_str_list(doc, "shapes"), "shapes")
        posdoc = doc.get("positions", {})
        _need(isinstance(posdoc, dict), "parse-error", "positions must be an object")
        positions = {}
        allpos = set()
        for s, lst in posdoc.items():
            _declared(s, shapes, "positions")
            positions[s] = FinSet(_str_list(posdoc, s), f"P({s})")
            allpos.update(positions[s].elements)
        c = Container(shapes, positions)
        if kind == "container":
            return c
        down = _str_table(doc, "down", 2)
        for (s, p), v in down.items():
            _declared(s, shapes, "down")
            _declared(p, positions.get(s, ()), "down")
            _declared(v, shapes, "down")
        root = _str_table(doc, "root", 1)
        for s, p in root.items():
            _declared(s, shapes, "root")
            _declared(p, positions.get(s, ()), "root")
        plus = _str_table(doc, "plus", 3)
        for (s, p, p2), v in plus.items():
            _declared(s, shapes, "plus")
            _declared(p, positions.get(s, ()), "plus")
            _declared(p2, allpos, "plus")
            _declared(v, positions.get(s, ()), "plus")
        return DirectedContainer(c, down, root, plus)

    if kind == "cat":
        objects = FinSet(_str_list(doc, "objects"), "objects")
        arrows = FinSet(_str_list(doc, "arrows"), "arrows")
        src = _str_table(doc, "src", 1)
        tgt = _str_table(doc, "tgt", 1)
        for table, name in ((src, "src"), (tgt, "tgt")):
            for a, o in table.items():
                _declared(a, arrows, name)
                _declared(o, objects, name)
        ident = _str_table(doc, "ident", 1)
        for o, a in ident.items():
            _declared(o, objects, "ident")
            _declared(a, arrows, "ident")
        comp = _str_table(doc, "comp", 2)
        for (p, p2), v in comp.items():
            for a in (p, p2, v):
                _declared(a, arrows, "comp")
        return SmallCat(objects, arrows, src, tgt, ident, comp)

    if kind in ("morphism", "preop"):
        t = _str_table(doc, "t", 1)
        q = _str_table(doc, "q", 2)
        if kind == "morphism":
            return DContMorphism(ContMorphism(t, q))
        return PreOpMorphism(t, q)

    return OminusMap(_str_table(doc, "ominus", 2))


def parse_file(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError("parse-error", f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParseError("parse-error", f"{path}: {e}")
    return parse_doc(doc)


def _safe(name):
    if SEP in name:
        raise StructureError("reserved-separator",
                             f"element name {name!r} contains reserved {SEP!r}")
    return name


def _pack(table, arity):
    out = {}
    for k, v in table.items():
        parts = k if arity > 1 else (k,)
        out[SEP.join(_safe(x) for x in parts)] = _safe(v)
    return out


def emit_doc(x):
    if isinstance(x, DirectedContainer):
        doc = emit_doc(x.base)
        doc["kind"] = "dcont"
        doc["down"] = _pack(x.down, 2)
        doc["root"] = _pack(x.root, 1)
        doc["plus"] = _pack(x.plus, 3)
        return doc
    if isinstance(x, Container):
        return {"kind": "container",
                "shapes": [_safe(s) for s in x.shapes],
                "positions": {s: [_safe(p) for p in x.positions[s]] for s in x.shapes
                              if s in x.positions}}
    if isinstance(x, SmallCat):
        return {"kind": "cat",
                "objects": [_safe(o) for o in x.objects],
                "arrows": [_safe(a) for a in x.arrows],
                "src": _pack(x.src, 1), "tgt": _pack(x.tgt, 1),
                "ident": _pack(x.ident, 1), "comp": _pack(x.comp, 2)}
    if isinstance(x, DContMorphism):
        return emit_doc(x.underlying)
    if isinstance(x, ContMorphism):
        return {"kind": "morphism", "t": _pack(x.shape_map, 1), "q": _pack(x.pos_map, 2)}
    if isinstance(x, PreOpMorphism):
        return {"kind": "preop", "t": _pack(x.shape_map, 1), "q": _pack(x.qbar, 2)}
    if isinstance(x, OminusMap):
        return {"kind": "ominus", "ominus": _pack(x.table, 2)}
    raise StructureError("bad-params", f"cannot emit {type(x).__name__}")


def emit(x):
    return json.dumps(emit_doc(x), sort_keys=True, indent=2)


def _render(report):
    lines = []
    for v in report.violations:
        parts = [v.law] + [f"{k}={val}" for k, val in v.witness]
        if v.lhs or v.rhs:
            parts += [f"lhs={v.lhs}", f"rhs={v.rhs}"]
        lines.append(" ".join(parts))
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines)


def _finish(report):
    if report.passed:
        return 0, "ok"
    return 1, _render(report)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    p = _Parser(prog="dircont")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("check")
    sp.add_argument("file")

    sp = sub.add_parser("laws")
    sp.add_argument("--comonad", action="store_true", required=True)
    sp.add_argument("file")
    sp.add_argument("--labels", type=int, default=None)

    for name in ("to-cat", "from-cat", "op", "groupoid"):
        sp = sub.add_parser(name)
        sp.add_argument("file")

    for name in ("coproduct", "tensor"):
        sp = sub.add_parser(name)
        sp.add_argument("first")
        sp.add_argument("second")

    sp = sub.add_parser("enumerate")
    sp.add_argument("file")
    sp.add_argument("--groupoids-only", action="store_true")
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("morphism")
    sp.add_argument("verb", choices=["check"])
    sp.add_argument("morphism")
    sp.add_argument("src")
    sp.add_argument("dst")
    sp.add_argument("--comonad", action="store_true")
    sp.add_argument("--labels", type=int, default=None)

    sp = sub.add_parser("nat-trans")
    sp.add_argument("verb", choices=["count"])
    sp.add_argument("first")
    sp.add_argument("second")

    sp = sub.add_parser("example")
    sp.add_argument("name")
    sp.add_argument("--param", required=True)
    sp.add_argument("--ominus", action="store_true")
    return p


def _labels_arg(k, dc):
    if k is None:
        return default_labels(dc)
    if k < 0:
        raise StructureError("bad-params", f"label count must be nonnegative, got {k}")
    return FinSet(tuple(f"x{i}" for i in range(k)), "labels")


def _as_container(x, what):
    if isinstance(x, DirectedContainer):
        return x.base
    if isinstance(x, Container):
        return x
    raise _UsageError(f"{what} needs a container or dcont file")


def _dispatch(ns):
    if ns.cmd == "check":
        x = parse_file(ns.file)
        if isinstance(x, DirectedContainer):
            return _finish(check_dcont_laws(x))
        if isinstance(x, Container):
            return _finish(validate_container(x))
        if isinstance(x, SmallCat):
            return _finish(check_cat_laws(x))
        raise _UsageError("check needs a container, dcont or cat file; "
                          "use 'morphism check' for morphisms")

    if ns.cmd == "laws":
        x = parse_file(ns.file)
        if not isinstance(x, DirectedContainer):
            raise _UsageError("laws --comonad needs a dcont file")
        rep = check_dcont_laws(x)
        if not rep.passed:
            return _finish(rep)
        return _finish(check_comonad_laws(x, _labels_arg(ns.labels, x)))

    if ns.cmd == "to-cat":
        x = parse_file(ns.file)
        if not isinstance(x, DirectedContainer):
            raise _UsageError("to-cat needs a dcont file")
        return 0, emit(dcont_to_cat(x))

    if ns.cmd == "from-cat":
        x = parse_file(ns.file)
        if not isinstance(x, SmallCat):
            raise _UsageError("from-cat needs a cat file")
        return 0, emit(cat_to_dcont(x))

    if ns.cmd == "op":
        x = parse_file(ns.file)
        if isinstance(x, DirectedContainer):
            return 0, emit(opposite_dcont(x))
        if isinstance(x, SmallCat):
            return 0, emit(opposite_cat(x))
        raise _UsageError("op needs a dcont or cat file")

    if ns.cmd in ("coproduct", "tensor"):
        a = parse_file(ns.first)
        b = parse_file(ns.second)
        if isinstance(a, DirectedContainer) and isinstance(b, DirectedContainer):
            f = coproduct_dcont if ns.cmd == "coproduct" else tensor_dcont
        elif isinstance(a, SmallCat) and isinstance(b, SmallCat):
            f = coproduct_cat if ns.cmd == "coproduct" else tensor_cat
        else:
            raise _UsageError(f"{ns.cmd} needs two dcont files or two cat files")
        return 0, emit(f(a, b))

    if ns.cmd == "groupoid":
        x = parse_file(ns.file)
        if isinstance(x, DirectedContainer):
            x = dcont_to_cat(x)
        if not isinstance(x, SmallCat):
            raise _UsageError("groupoid needs a cat or dcont file")
        inv = groupoid_inverse_search(x)
        if inv is None:
            return 1, "not a groupoid"
        return 0, "\n".join(f"{p} -> {inv.table[p]}" for p in x.arrows)

    if ns.cmd == "enumerate":
        x = parse_file(ns.file)
        c = _as_container(x, "enumerate")
        found = enum_structures(c, budget=ns.budget)
        if ns.groupoids_only:
            found = [dc for dc in found if is_groupoid(dc)]
        reps = quotient_by_iso(found)
        lines = [f"{len(found)} structures, {len(reps)} up to iso"]
        if ns.up_to_iso:
            lines.extend(emit(dc) for dc in reps)
        return 0, "\n".join(lines)

    if ns.cmd == "morphism":
        m = parse_file(ns.morphism)
        src = parse_file(ns.src)
        dst = parse_file(ns.dst)
        if isinstance(m, DContMorphism) and isinstance(src, Container) \
                and isinstance(dst, Container):
            return _finish(check_cont_morphism(m.underlying, src, dst))
        if isinstance(m, DContMorphism) and isinstance(src, DirectedContainer) \
                and isinstance(dst, DirectedContainer):
            rep = check_dcont_morphism(m, src, dst)
            if rep.passed and ns.comonad:
                rep = check_comonad_morphism(m, src, dst, _labels_arg(ns.labels, src))
            return _finish(rep)
        if isinstance(m, PreOpMorphism) and isinstance(src, SmallCat) \
                and isinstance(dst, SmallCat):
            return _finish(check_preop_morphism(m, src, dst))
        raise _UsageError("morphism check needs (morphism, container, container), "
                          "(morphism, dcont, dcont) or (preop, cat, cat)")

    if ns.cmd == "nat-trans":
        a = _as_container(parse_file(ns.first), "nat-trans")
        b = _as_container(parse_file(ns.second), "nat-trans")
        n = len(enum_nat_trans(a, b))
        k = nat_trans_oracle_count(a, b)
        return (0 if n == k else 1), f"morphisms={n} oracle={k}"

    if ns.cmd == "example":
        dc, om = make_example(ns.name, ns.param)
        if ns.ominus:
            if om is None:
                raise StructureError("bad-params",
                                     f"family {ns.name!r} has no ominus table")
            return 0, emit(om)
        return 0, emit(dc)

    raise _UsageError(f"unknown command {ns.cmd!r}")


def run(argv):
    """Pure entry point: returns (exit code, output text)."""
    try:
        ns = _build_parser().parse_args(argv)
    except _UsageError as e:
        return 2, f"usage error: {e}"
    try:
        return _dispatch(ns)
    except _UsageError as e:
        return 2, f"usage error: {e}"
    except ParseError as e:
        return 2, str(e)
    except NotLawfulError as e:
        return 1, _render(e.report)
    except StructureError as e:
        return 2, str(e)


def main():
    code, text = run(sys.argv[1:])
    if text:
        print(text)
    sys.exit(code)
