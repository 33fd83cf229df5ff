"""Small categories as the flat presentation of directed containers.

A directed container spreads its data over per-shape fibers; flattening
every (shape, position) pair into a single arrow set gives a small
category whose objects are the shapes: identities are the roots and
composition is the translation table.  The conversion back reads the
fibers off as the arrows out of each object.

Arrows created by the conversions are canonically named "(s,p)".  The
inverse conversion never parses these names, it keeps arrow names verbatim
as position names, so round trips rename elements canonically and agree
with the input up to isomorphism.
"""

from dataclasses import dataclass

from .core import (FinSet, Container, DirectedContainer, ContMorphism, DContMorphism,
                   NotLawfulError, StructureError, Violation, check_dcont_laws, fibers,
                   report_from)


def pair_name(x, y):
    return f"({x},{y})"


@dataclass(frozen=True)
class Polynomial:
    """A container with its positions flattened into one set.

    shape_of sends each position to the shape whose fiber it came from.
    """

    shapes: FinSet
    all_positions: FinSet
    shape_of: dict


@dataclass(frozen=True)
class PolyMorphism:
    """Morphism in the flat presentation: qbar is keyed (s, target position)."""

    shape_map: dict
    qbar: dict


@dataclass(frozen=True)
class SmallCat:
    objects: FinSet
    arrows: FinSet
    src: dict
    tgt: dict
    ident: dict
    comp: dict


@dataclass(frozen=True)
class PreOpMorphism:
    """Functor-like data between small categories, positions mapped backwards.

    qbar is keyed by (object s of the source category, arrow p of the
    target category with src'(p) == shape_map(s)) and yields an arrow of
    the source category out of s.
    """

    shape_map: dict
    qbar: dict


def cont_to_poly(c):
    order = [(s, p) for s in c.shapes for p in c.positions[s]]
    names = tuple(pair_name(s, p) for s, p in order)
    shape_of = {pair_name(s, p): s for s, p in order}
    return Polynomial(c.shapes, FinSet(names, "positions"), shape_of)


def poly_to_cont(poly):
    positions = {}
    for s in poly.shapes:
        mine = tuple(p for p in poly.all_positions if poly.shape_of.get(p) == s)
        positions[s] = FinSet(mine, f"P({s})")
    return Container(poly.shapes, positions)


def check_cat_laws(cat):
    """Exhaustive small-category law check.

    src/tgt/ident must be total and well typed, comp must be defined for
    exactly the pairs (p, p2) with tgt(p) == src(p2), and then:

      ident-src        src(ident s) == s
      ident-tgt        tgt(ident s) == s
      comp-src         src(comp(p,p2)) == src(p)
      comp-tgt         tgt(comp(p,p2)) == tgt(p2)
      comp-right-unit  comp(p, ident(tgt p)) == p
      comp-left-unit   comp(ident(src p), p) == p
      comp-assoc       comp(comp(p,p2),p3) == comp(p,comp(p2,p3))
    """
    vs = []
    for name, fs in (("objects", cat.objects), ("arrows", cat.arrows)):
        seen = set()
        for e in fs:
            if e in seen:
                vs.append(Violation("elements-distinct", (("set", name), ("element", e))))
            seen.add(e)
    for p in cat.arrows:
        for table, tab in (("src", cat.src), ("tgt", cat.tgt)):
            v = tab.get(p)
            if v is None:
                vs.append(Violation("table-incomplete", (("table", table), ("p", p))))
            elif v not in cat.objects:
                vs.append(Violation(f"{table}-typed", (("p", p), ("value", v))))
    for s in cat.objects:
        v = cat.ident.get(s)
        if v is None:
            vs.append(Violation("table-incomplete", (("table", "ident"), ("s", s))))
        elif v not in cat.arrows:
            vs.append(Violation("ident-typed", (("s", s), ("value", v))))
        else:
            if cat.src.get(v) is not None and cat.src[v] != s:
                vs.append(Violation("ident-src", (("s", s),), lhs=cat.src[v], rhs=s))
            if cat.tgt.get(v) is not None and cat.tgt[v] != s:
                vs.append(Violation("ident-tgt", (("s", s),), lhs=cat.tgt[v], rhs=s))
    composable = set()
    for p in cat.arrows:
        for p2 in cat.arrows:
            if cat.tgt.get(p) is None or cat.tgt.get(p) != cat.src.get(p2):
                continue
            composable.add((p, p2))
            v = cat.comp.get((p, p2))
            if v is None:
                vs.append(Violation("table-incomplete",
                                    (("table", "comp"), ("p", p), ("p2", p2))))
            elif v not in cat.arrows:
                vs.append(Violation("comp-typed", (("p", p), ("p2", p2), ("value", v))))
    for key in cat.comp:
        if key not in composable:
            vs.append(Violation("comp-domain", (("p", str(key[0])), ("p2", str(key[1])))))
    for key in cat.ident:
        if key not in cat.objects:
            vs.append(Violation("ident-domain", (("s", str(key)),)))

    def cmp(p, p2):
        v = cat.comp.get((p, p2))
        return v if v in cat.arrows else None

    for p in cat.arrows:
        s, t = cat.src.get(p), cat.tgt.get(p)
        if t is not None and cat.ident.get(t) in cat.arrows:
            v = cmp(p, cat.ident[t])
            if v is not None and v != p:
                vs.append(Violation("comp-right-unit", (("p", p),), lhs=v, rhs=p))
        if s is not None and cat.ident.get(s) in cat.arrows:
            v = cmp(cat.ident[s], p)
            if v is not None and v != p:
                vs.append(Violation("comp-left-unit", (("p", p),), lhs=v, rhs=p))
    for (p, p2) in sorted(composable, key=_arrow_key(cat)):
        v = cmp(p, p2)
        if v is None:
            continue
        if cat.src.get(v) is not None and cat.src[v] != cat.src.get(p):
            vs.append(Violation("comp-src", (("p", p), ("p2", p2)),
                                lhs=cat.src[v], rhs=str(cat.src.get(p))))
        if cat.tgt.get(v) is not None and cat.tgt[v] != cat.tgt.get(p2):
            vs.append(Violation("comp-tgt", (("p", p), ("p2", p2)),
                                lhs=cat.tgt[v], rhs=str(cat.tgt.get(p2))))
        for p3 in cat.arrows:
            if cat.tgt.get(p2) != cat.src.get(p3):
                continue
            w = cmp(p2, p3)
            left = cmp(v, p3)
            right = cmp(p, w) if w is not None else None
            if left is not None and right is not None and left != right:
                vs.append(Violation("comp-assoc", (("p", p), ("p2", p2), ("p3", p3)),
                                    lhs=left, rhs=right))
    return report_from(vs)


def _arrow_key(cat):
    idx = {p: i for i, p in enumerate(cat.arrows)}
    return lambda pair: (idx.get(pair[0], -1), idx.get(pair[1], -1))


def dcont_to_cat(dc):
    """Flattens a lawful directed container into a small category."""
    rep = check_dcont_laws(dc)
    if not rep.passed:
        raise NotLawfulError(rep, "dcont_to_cat needs a lawful directed container")
    shapes = dc.base.shapes
    fib = fibers(dc.base)
    order = [(s, p) for s in shapes for p in fib[s]]
    arrows = FinSet(tuple(pair_name(s, p) for s, p in order), "arrows")
    src = {pair_name(s, p): s for s, p in order}
    tgt = {pair_name(s, p): dc.down[(s, p)] for s, p in order}
    ident = {s: pair_name(s, dc.root[s]) for s in shapes}
    comp = {}
    for s, p in order:
        d = dc.down[(s, p)]
        for p2 in fib[d]:
            comp[(pair_name(s, p), pair_name(d, p2))] = pair_name(s, dc.plus[(s, p, p2)])
    return SmallCat(FinSet(shapes.elements, "objects"), arrows, src, tgt, ident, comp)


def cat_to_dcont(cat):
    """Reads a lawful small category back as a directed container.

    Positions at a shape are the arrows out of it, kept under their
    original names; down is tgt, root is ident and plus is comp.
    """
    rep = check_cat_laws(cat)
    if not rep.passed:
        raise NotLawfulError(rep, "cat_to_dcont needs a lawful category")
    shapes = FinSet(cat.objects.elements, "shapes")
    positions = {s: FinSet(tuple(p for p in cat.arrows if cat.src[p] == s), f"P({s})")
                 for s in shapes}
    base = Container(shapes, positions)
    down = {(s, p): cat.tgt[p] for s in shapes for p in positions[s]}
    root = {s: cat.ident[s] for s in shapes}
    plus = {}
    for s in shapes:
        for p in positions[s]:
            for p2 in positions[cat.tgt[p]]:
                plus[(s, p, p2)] = cat.comp[(p, p2)]
    return DirectedContainer(base, down, root, plus)


def discrete_cat(objects):
    """The category with identity arrows only, named "(s,s)"."""
    objects = FinSet(tuple(objects), "objects")
    arrows = FinSet(tuple(pair_name(s, s) for s in objects), "arrows")
    src = {pair_name(s, s): s for s in objects}
    tgt = dict(src)
    ident = {s: pair_name(s, s) for s in objects}
    comp = {(pair_name(s, s), pair_name(s, s)): pair_name(s, s) for s in objects}
    return SmallCat(objects, arrows, src, tgt, ident, comp)


def cofree_cat(objects):
    """The chaotic category: exactly one arrow "(x,y)" between any two objects."""
    objects = FinSet(tuple(objects), "objects")
    names = [(x, y) for x in objects for y in objects]
    arrows = FinSet(tuple(pair_name(x, y) for x, y in names), "arrows")
    src = {pair_name(x, y): x for x, y in names}
    tgt = {pair_name(x, y): y for x, y in names}
    ident = {x: pair_name(x, x) for x in objects}
    comp = {}
    for x, y in names:
        for z in objects:
            comp[(pair_name(x, y), pair_name(y, z))] = pair_name(x, z)
    return SmallCat(objects, arrows, src, tgt, ident, comp)


def check_poly_morphism(m, src, dst):
    """Typing check in the flat presentation.

    qbar must be keyed by exactly the pairs (s, p) with shape_of'(p) ==
    shape_map(s), and its value must be a position lying over s (the
    source condition).
    """
    vs = []
    t, qb = m.shape_map, m.qbar
    for s in src.shapes:
        if s not in t:
            vs.append(Violation("t-total", (("s", s),)))
        elif t[s] not in dst.shapes:
            vs.append(Violation("t-typed", (("s", s), ("value", t[s]))))
        else:
            for p in dst.all_positions:
                if dst.shape_of.get(p) != t[s]:
                    continue
                v = qb.get((s, p))
                if v is None:
                    vs.append(Violation("q-total", (("s", s), ("p", p))))
                elif v not in src.all_positions:
                    vs.append(Violation("q-typed", (("s", s), ("p", p), ("value", v))))
                elif src.shape_of.get(v) != s:
                    vs.append(Violation("source", (("s", s), ("p", p)),
                                        lhs=str(src.shape_of.get(v)), rhs=s))
    for (s, p) in qb:
        ok = s in src.shapes and p in dst.all_positions and dst.shape_of.get(p) == t.get(s)
        if not ok:
            vs.append(Violation("q-domain", (("s", str(s)), ("p", str(p)))))
    return report_from(vs)


def check_preop_morphism(m, src, dst):
    """Checks shape map plus arrow transposition between small categories.

      source  src(qbar(s,p)) == s
      target  shape_map(tgt(qbar(s,p))) == tgt'(p)
      ident   qbar(s, ident'(shape_map s)) == ident(s)
      comp    comp(qbar(s,p), qbar(tgt(qbar(s,p)), p2)) == qbar(s, comp'(p,p2))

    qbar must be defined for exactly the pairs (s, p) with src'(p) ==
    shape_map(s).  Both categories are expected to pass check_cat_laws.
    """
    vs = []
    t, qb = m.shape_map, m.qbar
    for s in src.objects:
        if s not in t:
            vs.append(Violation("t-total", (("s", s),)))
        elif t[s] not in dst.objects:
            vs.append(Violation("t-typed", (("s", s), ("value", t[s]))))
    for (s, p) in qb:
        ok = s in src.objects and p in dst.arrows and dst.src.get(p) == t.get(s)
        if not ok:
            vs.append(Violation("q-domain", (("s", str(s)), ("p", str(p)))))
    for s in src.objects:
        ts = t.get(s)
        if ts not in dst.objects:
            continue
        for p in dst.arrows:
            if dst.src.get(p) != ts:
                continue
            v = qb.get((s, p))
            if v is None:
                vs.append(Violation("table-incomplete", (("table", "q"), ("s", s), ("p", p))))
                continue
            if v not in src.arrows:
                vs.append(Violation("q-typed", (("s", s), ("p", p), ("value", v))))
                continue
            if src.src.get(v) != s:
                vs.append(Violation("source", (("s", s), ("p", p)),
                                    lhs=str(src.src.get(v)), rhs=s))
            mid = src.tgt.get(v)
            lhs = t.get(mid) if mid is not None else None
            rhs = dst.tgt.get(p)
            if lhs is not None and rhs is not None and lhs != rhs:
                vs.append(Violation("target", (("s", s), ("p", p)), lhs=lhs, rhs=rhs))
        io = dst.ident.get(ts)
        if io is not None and (s, io) in qb and src.ident.get(s) is not None:
            if qb[(s, io)] != src.ident[s]:
                vs.append(Violation("ident", (("s", s),), lhs=qb[(s, io)], rhs=src.ident[s]))
        for p in dst.arrows:
            if dst.src.get(p) != ts or (s, p) not in qb:
                continue
            v = qb[(s, p)]
            mid = src.tgt.get(v)
            for p2 in dst.arrows:
                if dst.src.get(p2) != dst.tgt.get(p):
                    continue
                v2 = qb.get((mid, p2))
                lhs = src.comp.get((v, v2)) if v2 is not None else None
                pp = dst.comp.get((p, p2))
                rhs = qb.get((s, pp)) if pp is not None else None
                if lhs is not None and rhs is not None and lhs != rhs:
                    vs.append(Violation("comp", (("s", s), ("p", p), ("p2", p2)),
                                        lhs=lhs, rhs=rhs))
    return report_from(vs)


def dmorph_to_preop(m):
    """Transposes a directed container morphism into category morphism data.

    The result lives between the flattened categories of the endpoints;
    position names are wrapped into the canonical "(s,p)" arrow names.
    """
    t = dict(m.underlying.shape_map)
    qb = {}
    for (s, p2), v in m.underlying.pos_map.items():
        qb[(s, pair_name(t[s], p2))] = pair_name(s, v)
    return PreOpMorphism(t, qb)


def preop_to_dmorph(m, src, dst):
    """Inverse transposition, back between the directed containers.

    src and dst are the directed container endpoints; the arrow names in
    qbar are resolved against the naming dcont_to_cat would assign, so
    this is exactly inverse to dmorph_to_preop.
    """
    rev_src = _arrow_names(src)
    rev_dst = _arrow_names(dst)
    t = dict(m.shape_map)
    pos_map = {}
    for (s, parrow), varrow in m.qbar.items():
        if parrow not in rev_dst or varrow not in rev_src:
            raise StructureError("domain-mismatch",
                                 f"arrow name not in the flattened endpoints: "
                                 f"{(parrow if parrow not in rev_dst else varrow)!r}")
        d2, p2 = rev_dst[parrow]
        s2, v = rev_src[varrow]
        if d2 != t.get(s) or s2 != s:
            raise StructureError("domain-mismatch",
                                 f"qbar entry at {(s, parrow)!r} lies over the wrong shape")
        pos_map[(s, p2)] = v
    return DContMorphism(ContMorphism(t, pos_map))


def _arrow_names(dc):
    fib = fibers(dc.base)
    return {pair_name(s, p): (s, p) for s in dc.base.shapes for p in fib[s]}


def is_linear(m):
    """True when the position map never depends on the supplied source shape.

    Takes a container or directed container morphism.  Entries (s, p2) and
    (s2, p2) with t(s) == t(s2) concern the same target position, and
    linearity demands they pick the same source position.
    """
    u = getattr(m, "underlying", m)
    groups = {}
    for (s, p2), v in u.pos_map.items():
        groups.setdefault((u.shape_map.get(s), p2), set()).add(v)
    return all(len(g) <= 1 for g in groups.values())


def find_cat_isomorphism(a, b):
    """Searches for an isomorphism of small categories.

    Returns (object_bijection, arrow_bijection) or None.  Works through
    the directed container presentation, which is equivalent: any category
    isomorphism maps arrows-out-of-s to arrows-out-of-(image of s).
    """
    from .core import find_isomorphism
    da, db = cat_to_dcont(a), cat_to_dcont(b)
    found = find_isomorphism(da, db)
    if found is None:
        return None
    shape_bij, pos_bij = found
    arrow_bij = {}
    for s, m in pos_bij.items():
        arrow_bij.update(m)
    return shape_bij, arrow_bij
