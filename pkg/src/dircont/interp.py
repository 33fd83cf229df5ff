"""Interpreting containers as labeled-value builders.

A value of a container over a label set is a shape together with one label
per position of that shape.  Directed structure makes this a comonad:
counit reads the label at the root, comult relabels each position p with
the whole value as seen from p (shape down(s, p), labels pulled back along
plus).  The checks below quantify over every value for a given label set,
which is exhaustive at the sizes used here.

Labels are opaque; nested values are ordinary values whose labels happen
to be values themselves, which is what iterated comult produces.
"""

import itertools
from dataclasses import dataclass

from .core import (ContMorphism, FinSet, StructureError, Violation, fibers, report_from)


@dataclass(frozen=True)
class ContainerValue:
    """One inhabitant: a shape plus a labeling of its positions."""

    shape: str
    labeling: dict


# Iterated comult wraps labels in further values; same representation.
NestedValue = ContainerValue


def enum_values(c, x):
    """All values of c over label set x, in canonical order.

    Shapes come in canonical order; labelings count through the positions
    like a mixed-radix odometer with the last position moving fastest.
    """
    fib = fibers(c)
    out = []
    labels = tuple(x)
    for s in c.shapes:
        poss = fib[s]
        for combo in itertools.product(labels, repeat=len(poss)):
            out.append(ContainerValue(s, dict(zip(poss, combo))))
    return out


def map_value(c, f, val):
    """Applies a label table f to every position of val."""
    out = {}
    for p, v in val.labeling.items():
        if v not in f:
            raise StructureError("label-out-of-domain", f"label {v!r} at position {p!r}")
        out[p] = f[v]
    return ContainerValue(val.shape, out)


def interp_morphism(m, val):
    """Runs a container morphism on a value: reshape, pull labels back along q."""
    s = val.shape
    t = m.shape_map[s]
    out = {}
    for (s2, p2), v in m.pos_map.items():
        if s2 == s:
            out[p2] = val.labeling[v]
    return ContainerValue(t, out)


def counit(dc, val):
    """The label at the root position."""
    return val.labeling[dc.root[val.shape]]


def comult(dc, val):
    """Relabels every position with the value as seen from there."""
    s = val.shape
    fib = fibers(dc.base)
    out = {}
    for p in fib[s]:
        d = dc.down[(s, p)]
        inner = {p2: val.labeling[dc.plus[(s, p, p2)]] for p2 in fib[d]}
        out[p] = ContainerValue(d, inner)
    return ContainerValue(s, out)


def default_labels(dc):
    """Label set sized min(largest fiber + 1, 3); distinct labels expose defects."""
    biggest = max((len(dc.base.positions[s]) for s in dc.base.shapes), default=0)
    k = min(biggest + 1, 3)
    return FinSet(tuple(f"x{i}" for i in range(k)), "labels")


def _render_value(val):
    inside = ",".join(f"{p}:{v}" for p, v in val.labeling.items())
    return f"{val.shape}[{inside}]"


def check_comonad_laws(dc, x=None):
    """Checks the comonad equations on every value over x.

      counit-comult      counit(comult v) == v
      map-counit-comult  mapping counit over comult v == v
      comult-coassoc     comult(comult v) == mapping comult over comult v

    The tables of dc are expected to be total (lawfulness itself is not
    assumed; that equivalence is the point of the pullback tests).
    """
    if x is None:
        x = default_labels(dc)
    vs = []
    for val in enum_values(dc.base, x):
        w = (("s", val.shape), ("v", _render_value(val)))
        dv = comult(dc, val)
        picked = counit(dc, dv)
        if picked != val:
            vs.append(Violation("counit-comult", w, lhs=_render_value(picked),
                                rhs=_render_value(val)))
        mapped = ContainerValue(dv.shape,
                                {p: counit(dc, inner) for p, inner in dv.labeling.items()})
        if mapped != val:
            vs.append(Violation("map-counit-comult", w, lhs=_render_value(mapped),
                                rhs=_render_value(val)))
        lhs = comult(dc, dv)
        rhs = ContainerValue(dv.shape,
                             {p: comult(dc, inner) for p, inner in dv.labeling.items()})
        if lhs != rhs:
            vs.append(Violation("comult-coassoc", w))
    return report_from(vs)


def check_comonad_morphism(m, src, dst, x=None):
    """Checks that a morphism commutes with counit and comult on every value.

      counit-compat  counit'(run v) == counit(v)
      comult-compat  comult'(run v) == run applied inside and outside of comult(v)
    """
    if x is None:
        x = default_labels(src)
    u = m.underlying
    vs = []
    for val in enum_values(src.base, x):
        w = (("s", val.shape), ("v", _render_value(val)))
        image = interp_morphism(u, val)
        if counit(dst, image) != counit(src, val):
            vs.append(Violation("counit-compat", w, lhs=str(counit(dst, image)),
                                rhs=str(counit(src, val))))
        lhs = comult(dst, image)
        stage = interp_morphism(u, comult(src, val))
        rhs = ContainerValue(stage.shape,
                             {p: interp_morphism(u, inner)
                              for p, inner in stage.labeling.items()})
        if lhs != rhs:
            vs.append(Violation("comult-compat", w))
    return report_from(vs)


def enum_nat_trans(c, c2):
    """All container morphisms from c to c2, in canonical order."""
    fib, fib2 = fibers(c), fibers(c2)
    shapes = c.shapes.elements
    out = []
    for tchoice in itertools.product(c2.shapes.elements, repeat=len(shapes)):
        t = dict(zip(shapes, tchoice))
        cells = [(s, p2) for s in shapes for p2 in fib2[t[s]]]
        pools = [fib[s] for s, _ in cells]
        for values in itertools.product(*pools):
            out.append(ContMorphism(t, dict(zip(cells, values))))
    return out


def nat_trans_oracle_count(c, c2):
    """Counts natural families of component functions, independently of (t, q).

    Components are taken at label sets of size 0..K with K the largest
    fiber of c; a family must commute with every function between those
    label sets.  Elements of the interpretation are (shape, label tuple)
    pairs, and the search assigns images one element at a time, checking
    each naturality square as soon as both of its ends are fixed.
    """
    fib, fib2 = fibers(c), fibers(c2)
    K = max((len(fib[s]) for s in c.shapes), default=0)
    sizes = range(K + 1)

    def elems(fibmap, shapes, k):
        out = []
        for s in shapes:
            for v in itertools.product(range(k), repeat=len(fibmap[s])):
                out.append((s, v))
        return out

    dom = {k: elems(fib, c.shapes.elements, k) for k in sizes}
    cod = {k: elems(fib2, c2.shapes.elements, k) for k in sizes}

    def act(f, e):
        s, v = e
        return (s, tuple(f[i] for i in v))

    # naturality squares: alpha[key_b] == f applied to alpha[key_a]
    constraints = []
    for j in sizes:
        for k in sizes:
            for f in itertools.product(range(k), repeat=j):
                for e in dom[j]:
                    constraints.append(((j, e), (k, act(f, e)), f))
    by_key = {}
    for idx, (ka, kb, f) in enumerate(constraints):
        by_key.setdefault(ka, []).append(idx)
        by_key.setdefault(kb, []).append(idx)

    keys = [(k, e) for k in sizes for e in dom[k]]
    alpha = {}

    def ok(idx):
        ka, kb, f = constraints[idx]
        if ka not in alpha or kb not in alpha:
            return True
        return alpha[kb] == act(f, alpha[ka])

    def fill(i):
        if i == len(keys):
            return 1
        key = keys[i]
        k = key[0]
        total = 0
        for image in cod[k]:
            alpha[key] = image
            if all(ok(idx) for idx in by_key.get(key, ())):
                total += fill(i + 1)
            del alpha[key]
        return total

    return fill(0)
