"""Sums, tensors, opposites and inverse structure.

Coproducts tag shapes with "L:"/"R:" and act componentwise; the tensor
pairs shapes and positions pointwise ("(x,y)" names).  Opposites reverse
arrows: on categories by swapping src/tgt, on directed containers by the
fibered construction whose positions at s are all (s2, p) with
down(s2, p) == s.

A category is a groupoid when every arrow has a two-sided inverse; the
positionwise counterpart is an ominus table sending each (s, p) to a
position of down(s, p) that undoes the translation.
"""

from dataclasses import dataclass

from .core import (FinSet, Container, DirectedContainer, ContMorphism, DContMorphism,
                   NotLawfulError, Violation, check_dcont_laws, fibers, report_from)
from .category import SmallCat, check_cat_laws, dcont_to_cat, pair_name


@dataclass(frozen=True)
class OminusMap:
    """Positionwise inverse candidate: (s, p) maps into the fiber of down(s, p)."""

    table: dict


@dataclass(frozen=True)
class InverseMap:
    """Arrowwise inverse candidate for a small category."""

    table: dict


def _require_lawful_dcont(dc, what):
    rep = check_dcont_laws(dc)
    if not rep.passed:
        raise NotLawfulError(rep, what)


def _require_lawful_cat(cat, what):
    rep = check_cat_laws(cat)
    if not rep.passed:
        raise NotLawfulError(rep, what)


def _tag(tag, x):
    return f"{tag}:{x}"


def coproduct_dcont(a, b):
    """Tagged disjoint union; every table acts componentwise."""
    _require_lawful_dcont(a, "coproduct of unlawful structure")
    _require_lawful_dcont(b, "coproduct of unlawful structure")
    shapes = FinSet(tuple(_tag("L", s) for s in a.base.shapes)
                    + tuple(_tag("R", s) for s in b.base.shapes), "shapes")
    positions = {}
    for s in a.base.shapes:
        positions[_tag("L", s)] = a.base.positions[s]
    for s in b.base.shapes:
        positions[_tag("R", s)] = b.base.positions[s]
    down, root, plus = {}, {}, {}
    for tag, side in (("L", a), ("R", b)):
        for s in side.base.shapes:
            root[_tag(tag, s)] = side.root[s]
        for (s, p), d in side.down.items():
            down[(_tag(tag, s), p)] = _tag(tag, d)
        for (s, p, p2), v in side.plus.items():
            plus[(_tag(tag, s), p, p2)] = v
    return DirectedContainer(Container(shapes, positions), down, root, plus)


def coproduct_cat(a, b):
    """Disjoint union of categories with tagged objects and arrows."""
    _require_lawful_cat(a, "coproduct of unlawful category")
    _require_lawful_cat(b, "coproduct of unlawful category")
    objects = FinSet(tuple(_tag("L", x) for x in a.objects)
                     + tuple(_tag("R", x) for x in b.objects), "objects")
    arrows = FinSet(tuple(_tag("L", p) for p in a.arrows)
                    + tuple(_tag("R", p) for p in b.arrows), "arrows")
    src, tgt, ident, comp = {}, {}, {}, {}
    for tag, side in (("L", a), ("R", b)):
        for p in side.arrows:
            src[_tag(tag, p)] = _tag(tag, side.src[p])
            tgt[_tag(tag, p)] = _tag(tag, side.tgt[p])
        for x in side.objects:
            ident[_tag(tag, x)] = _tag(tag, side.ident[x])
        for (p, p2), v in side.comp.items():
            comp[(_tag(tag, p), _tag(tag, p2))] = _tag(tag, v)
    return SmallCat(objects, arrows, src, tgt, ident, comp)


def coproduct_injections(a, b):
    """The two canonical morphisms into coproduct_dcont(a, b)."""
    inl = DContMorphism(ContMorphism(
        {s: _tag("L", s) for s in a.base.shapes},
        {(s, p): p for s in a.base.shapes for p in a.base.positions[s]}))
    inr = DContMorphism(ContMorphism(
        {s: _tag("R", s) for s in b.base.shapes},
        {(s, p): p for s in b.base.shapes for p in b.base.positions[s]}))
    return inl, inr


def coproduct_mediator(a, b, f, g):
    """The unique morphism out of the coproduct agreeing with f and g."""
    t = {}
    q = {}
    for s in a.base.shapes:
        t[_tag("L", s)] = f.underlying.shape_map[s]
    for s in b.base.shapes:
        t[_tag("R", s)] = g.underlying.shape_map[s]
    for (s, p2), v in f.underlying.pos_map.items():
        q[(_tag("L", s), p2)] = v
    for (s, p2), v in g.underlying.pos_map.items():
        q[(_tag("R", s), p2)] = v
    return DContMorphism(ContMorphism(t, q))


def tensor_dcont(a, b):
    """Pointwise pairing of shapes and positions, all tables componentwise."""
    _require_lawful_dcont(a, "tensor of unlawful structure")
    _require_lawful_dcont(b, "tensor of unlawful structure")
    fa, fb = fibers(a.base), fibers(b.base)
    shapes = FinSet(tuple(pair_name(x, y) for x in a.base.shapes for y in b.base.shapes),
                    "shapes")
    positions = {}
    down, root, plus = {}, {}, {}
    for x in a.base.shapes:
        for y in b.base.shapes:
            s = pair_name(x, y)
            positions[s] = FinSet(tuple(pair_name(p, r) for p in fa[x] for r in fb[y]),
                                  f"P({s})")
            root[s] = pair_name(a.root[x], b.root[y])
            for p in fa[x]:
                for r in fb[y]:
                    dx, dy = a.down[(x, p)], b.down[(y, r)]
                    down[(s, pair_name(p, r))] = pair_name(dx, dy)
                    for p2 in fa[dx]:
                        for r2 in fb[dy]:
                            plus[(s, pair_name(p, r), pair_name(p2, r2))] = \
                                pair_name(a.plus[(x, p, p2)], b.plus[(y, r, r2)])
    return DirectedContainer(Container(shapes, positions), down, root, plus)


def tensor_cat(a, b):
    """The product category: componentwise arrows between object pairs."""
    _require_lawful_cat(a, "tensor of unlawful category")
    _require_lawful_cat(b, "tensor of unlawful category")
    objects = FinSet(tuple(pair_name(x, y) for x in a.objects for y in b.objects), "objects")
    arrows = FinSet(tuple(pair_name(p, r) for p in a.arrows for r in b.arrows), "arrows")
    src = {pair_name(p, r): pair_name(a.src[p], b.src[r]) for p in a.arrows for r in b.arrows}
    tgt = {pair_name(p, r): pair_name(a.tgt[p], b.tgt[r]) for p in a.arrows for r in b.arrows}
    ident = {pair_name(x, y): pair_name(a.ident[x], b.ident[y])
             for x in a.objects for y in b.objects}
    comp = {}
    for (p, p2), v in a.comp.items():
        for (r, r2), w in b.comp.items():
            comp[(pair_name(p, r), pair_name(p2, r2))] = pair_name(v, w)
    return SmallCat(objects, arrows, src, tgt, ident, comp)


def opposite_cat(cat):
    """Swap src and tgt and flip composition; an involution on the nose."""
    _require_lawful_cat(cat, "opposite of unlawful category")
    comp = {(p2, p): v for (p, p2), v in cat.comp.items()}
    return SmallCat(cat.objects, cat.arrows, dict(cat.tgt), dict(cat.src),
                    dict(cat.ident), comp)


def opposite_dcont(dc):
    """Reverses a directed container.

    A position of the result at s is any pair (s2, p) with down(s2, p) == s,
    pointing back up to s2.  Roots become (s, root s) and translation flips
    the order of application.
    """
    _require_lawful_dcont(dc, "opposite of unlawful structure")
    fib = fibers(dc.base)
    shapes = FinSet(dc.base.shapes.elements, "shapes")
    members = {s: [] for s in shapes}  # (s2, p) pairs landing at s
    for s2 in shapes:
        for p in fib[s2]:
            members[dc.down[(s2, p)]].append((s2, p))
    positions = {s: FinSet(tuple(pair_name(s2, p) for s2, p in members[s]), f"P({s})")
                 for s in shapes}
    down, root, plus = {}, {}, {}
    for s in shapes:
        root[s] = pair_name(s, dc.root[s])
        for s2, p in members[s]:
            down[(s, pair_name(s2, p))] = s2
            for s3, p2 in members[s2]:
                plus[(s, pair_name(s2, p), pair_name(s3, p2))] = \
                    pair_name(s3, dc.plus[(s3, p2, p)])
    return DirectedContainer(Container(shapes, positions), down, root, plus)


def groupoid_inverse_search(cat):
    """Finds the two-sided inverse of every arrow, or None if some arrow has none.

    Candidates are scanned in canonical arrow order; two-sided inverses are
    unique in a lawful category, so the scan order cannot change the result.
    """
    _require_lawful_cat(cat, "inverse search needs a lawful category")
    table = {}
    for p in cat.arrows:
        found = None
        for q in cat.arrows:
            if (cat.src[q] == cat.tgt[p] and cat.tgt[q] == cat.src[p]
                    and cat.comp.get((p, q)) == cat.ident[cat.src[p]]
                    and cat.comp.get((q, p)) == cat.ident[cat.tgt[p]]):
                found = q
                break
        if found is None:
            return None
        table[p] = found
    return InverseMap(table)


def check_bidirected(dc, om):
    """Checks an ominus table against a lawful directed container.

      inverse-down  down(down(s,p), ominus(s,p)) == s
      plus-inverse  plus(s, p, ominus(s,p)) == root(s)
      inverse-plus  plus(down(s,p), ominus(s,p), p) == root(down(s,p))

    The report carries a note stating whether inverse-down held wherever
    plus-inverse did; the first law is derivable from the second plus the
    directed container laws, so the note should always say yes.
    """
    fib = fibers(dc.base)
    vs = []
    tab = om.table
    b1_bad, b2_bad = set(), set()
    for s in dc.base.shapes:
        for p in fib[s]:
            d = dc.down[(s, p)]
            v = tab.get((s, p))
            if v is None:
                vs.append(Violation("table-incomplete", (("table", "ominus"), ("s", s), ("p", p))))
                continue
            if v not in fib[d]:
                vs.append(Violation("ominus-typed", (("s", s), ("p", p), ("value", v))))
                continue
            lhs = dc.down[(d, v)]
            if lhs != s:
                b1_bad.add((s, p))
                vs.append(Violation("inverse-down", (("s", s), ("p", p)), lhs=lhs, rhs=s))
            lhs = dc.plus[(s, p, v)]
            if lhs != dc.root[s]:
                b2_bad.add((s, p))
                vs.append(Violation("plus-inverse", (("s", s), ("p", p)),
                                    lhs=lhs, rhs=dc.root[s]))
            if (s, p) not in b1_bad:
                lhs = dc.plus.get((d, v, p))
                if lhs is not None and lhs != dc.root[d]:
                    vs.append(Violation("inverse-plus", (("s", s), ("p", p)),
                                        lhs=lhs, rhs=dc.root[d]))
    for key in tab:
        s, p = key
        if s not in dc.base.shapes or p not in fib.get(s, ()):
            vs.append(Violation("ominus-domain", (("s", str(s)), ("p", str(p)))))
    derivable = b1_bad <= b2_bad
    note = f"inverse-down-derivable-from-plus-inverse: {'yes' if derivable else 'no'}"
    return report_from(vs, notes=(note,))


def ominus_from_inverse(cat, inv):
    """Reads an arrowwise inverse as an ominus table.

    The result belongs to cat_to_dcont(cat), whose positions are arrow
    names, so the table is inv restricted fiberwise: (s, p) maps to the
    inverse of p, an arrow out of tgt(p).
    """
    table = {}
    for s in cat.objects:
        for p in cat.arrows:
            if cat.src[p] == s:
                table[(s, p)] = inv.table[p]
    return OminusMap(table)


def inverse_from_ominus(dc, om):
    """Reads an ominus table as an arrowwise inverse on dcont_to_cat(dc).

    The arrow "(s,p)" inverts to "(down(s,p), ominus(s,p))".
    """
    table = {}
    for s in dc.base.shapes:
        for p in dc.base.positions[s]:
            d = dc.down[(s, p)]
            table[pair_name(s, p)] = pair_name(d, om.table[(s, p)])
    return InverseMap(table)


def is_groupoid(dc):
    """True when the flattened category of dc has all inverses."""
    return groupoid_inverse_search(dcont_to_cat(dc)) is not None
