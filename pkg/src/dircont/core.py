"""Finite containers and directed containers as explicit lookup tables.

Shapes, positions and labels are plain strings.  Position sets are scoped
per shape: the same name may appear in different fibers and means different
things there.  Every operation table is an ordinary dict, laws are checked
by exhaustive iteration in canonical order (the element order of the
underlying finite sets), and checkers report every violating instance
rather than raising, so constructors happily accept ill-lawed data.

Structural equality of two structures is just ==.  Equality up to
isomorphism is find_isomorphism, which searches for a shape bijection plus
per-shape position bijections commuting with all three tables.
"""

import itertools
from dataclasses import dataclass, field


class StructureError(Exception):
    """An operation was applied to unsuitable input; code is a stable slug."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


class NotLawfulError(StructureError):
    """Raised by transformations whose input must pass its law check."""

    def __init__(self, report, what):
        super().__init__("not-lawful", what)
        self.report = report


@dataclass(frozen=True)
class FinSet:
    """A finite set of strings; element order is the canonical order.

    The name is bookkeeping only and is ignored by equality.
    """

    elements: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


@dataclass(frozen=True)
class Container:
    """Shapes plus one position set per shape."""

    shapes: FinSet
    positions: dict


@dataclass(frozen=True)
class DirectedContainer:
    """A container with subshape, root and translation tables.

    down maps (shape, position) to a shape, root maps a shape to a position
    of it, and plus maps (s, p, p2) with p2 a position of down(s, p) back to
    a position of s.  Nothing is validated here; see check_dcont_laws.
    """

    base: Container
    down: dict
    root: dict
    plus: dict


@dataclass(frozen=True)
class ContMorphism:
    """Shape map t plus position map q running backwards.

    q is keyed by (source shape s, position of the target container at
    t(s)) and yields a position of the source container at s.
    """

    shape_map: dict
    pos_map: dict


@dataclass(frozen=True)
class DContMorphism:
    """A container morphism expected to respect down, root and plus."""

    underlying: ContMorphism


@dataclass(frozen=True)
class Violation:
    """One law instance that failed; witness is ordered (name, value) pairs."""

    law: str
    witness: tuple
    lhs: str = ""
    rhs: str = ""


@dataclass(frozen=True)
class LawReport:
    passed: bool
    violations: tuple
    notes: tuple = ()


def report_from(violations, notes=()):
    vs = tuple(violations)
    return LawReport(passed=not vs, violations=vs, notes=tuple(notes))


def _distinct_violations(fs, setname):
    seen = set()
    out = []
    for e in fs.elements:
        if e in seen:
            out.append(Violation("elements-distinct", (("set", setname), ("element", e))))
        seen.add(e)
    return out


def validate_container(c):
    """Totality check: well formed finite sets and one fiber per shape."""
    vs = _distinct_violations(c.shapes, "shapes")
    for s in c.shapes:
        if s not in c.positions:
            vs.append(Violation("positions-total", (("s", s),)))
        else:
            vs.extend(_distinct_violations(c.positions[s], f"positions[{s}]"))
    for s in c.positions:
        if s not in c.shapes:
            vs.append(Violation("positions-domain", (("s", s),)))
    return report_from(vs)


def fibers(c):
    return {s: c.positions[s].elements for s in c.shapes}


def check_dcont_laws(dc):
    """Exhaustive check of the directed container laws.

    Laws, each quantified over every welltyped instantiation:

      down-root        down(s, root s) == s
      down-plus        down(s, plus(s,p,p2)) == down(down(s,p), p2)
      plus-right-unit  plus(s, p, root(down(s,p))) == p
      plus-left-unit   plus(s, root s, p) == p
      plus-assoc       plus(s, plus(s,p,p2), p3) == plus(s, p, plus(down(s,p), p2, p3))

    Missing or extra table entries and values outside their codomain are
    reported as violations (table-incomplete, *-typed, *-domain), never
    raised.  Law instances whose lookups cannot all be resolved are skipped;
    the unresolved lookup is already reported by the structural pass.
    """
    base_rep = validate_container(dc.base)
    if not base_rep.passed:
        return base_rep
    shapes = dc.base.shapes.elements
    fib = fibers(dc.base)
    down, root, plus = dc.down, dc.root, dc.plus
    vs = []

    # structural pass: totality and codomain typing
    for s in shapes:
        if s not in root:
            vs.append(Violation("table-incomplete", (("table", "root"), ("s", s))))
        elif root[s] not in fib[s]:
            vs.append(Violation("root-typed", (("s", s), ("value", root[s]))))
    for s in shapes:
        for p in fib[s]:
            d = down.get((s, p))
            if d is None:
                vs.append(Violation("table-incomplete", (("table", "down"), ("s", s), ("p", p))))
                continue
            if d not in shapes:
                vs.append(Violation("down-typed", (("s", s), ("p", p), ("value", d))))
                continue
            for p2 in fib[d]:
                v = plus.get((s, p, p2))
                if v is None:
                    vs.append(Violation("table-incomplete",
                                        (("table", "plus"), ("s", s), ("p", p), ("p2", p2))))
                elif v not in fib[s]:
                    vs.append(Violation("plus-typed",
                                        (("s", s), ("p", p), ("p2", p2), ("value", v))))
    for s in root:
        if s not in shapes:
            vs.append(Violation("root-domain", (("s", str(s)),)))
    for key in down:
        s, p = key
        if s not in shapes or p not in fib.get(s, ()):
            vs.append(Violation("down-domain", (("s", str(s)), ("p", str(p)))))
    for key in plus:
        s, p, p2 = key
        d = down.get((s, p)) if s in shapes and p in fib.get(s, ()) else None
        if d is None or d not in shapes or p2 not in fib[d]:
            vs.append(Violation("plus-domain", (("s", str(s)), ("p", str(p)), ("p2", str(p2)))))

    # law pass, guarded lookups
    for s in shapes:
        o = root.get(s)
        d = down.get((s, o)) if o in fib[s] else None
        if d is not None:
            if d != s:
                vs.append(Violation("down-root", (("s", s),), lhs=d, rhs=s))
            else:
                for p in fib[s]:
                    v = plus.get((s, o, p))
                    if v is not None and v != p:
                        vs.append(Violation("plus-left-unit", (("s", s), ("p", p)), lhs=v, rhs=p))
    for s in shapes:
        for p in fib[s]:
            d = down.get((s, p))
            if d is None or d not in shapes:
                continue
            o2 = root.get(d)
            if o2 in fib[d]:
                v = plus.get((s, p, o2))
                if v is not None and v != p:
                    vs.append(Violation("plus-right-unit", (("s", s), ("p", p)), lhs=v, rhs=p))
            for p2 in fib[d]:
                v = plus.get((s, p, p2))
                if v is None or v not in fib[s]:
                    continue
                lhs = down.get((s, v))
                rhs = down.get((d, p2))
                if lhs is not None and rhs is not None and lhs != rhs:
                    vs.append(Violation("down-plus", (("s", s), ("p", p), ("p2", p2)),
                                        lhs=lhs, rhs=rhs))
                d2 = down.get((d, p2))
                if d2 is None or d2 not in shapes:
                    continue
                for p3 in fib[d2]:
                    a = plus.get((s, v, p3))
                    c = plus.get((d, p2, p3))
                    b = plus.get((s, p, c)) if c is not None else None
                    if a is not None and b is not None and a != b:
                        vs.append(Violation(
                            "plus-assoc",
                            (("s", s), ("p", p), ("p2", p2), ("p3", p3)),
                            lhs=a, rhs=b))
    return report_from(vs)


def check_cont_morphism(m, src, dst):
    """Typing check for a plain container morphism (t, q).

    t must map every source shape to a target shape; q must be defined for
    exactly the pairs (s, p2) with p2 a target position at t(s) and must
    land in the source positions at s.
    """
    vs = []
    sf = fibers(src)
    df = fibers(dst)
    t, q = m.shape_map, m.pos_map
    for s in src.shapes:
        if s not in t:
            vs.append(Violation("t-total", (("s", s),)))
        elif t[s] not in dst.shapes:
            vs.append(Violation("t-typed", (("s", s), ("value", t[s]))))
        else:
            for p2 in df[t[s]]:
                v = q.get((s, p2))
                if v is None:
                    vs.append(Violation("q-total", (("s", s), ("p2", p2))))
                elif v not in sf[s]:
                    vs.append(Violation("q-typed", (("s", s), ("p2", p2), ("value", v))))
    for key in q:
        s, p2 = key
        ok = s in src.shapes and t.get(s) in dst.shapes and p2 in df[t[s]]
        if not ok:
            vs.append(Violation("q-domain", (("s", str(s)), ("p2", str(p2)))))
    for s in t:
        if s not in src.shapes:
            vs.append(Violation("t-domain", (("s", str(s)),)))
    return report_from(vs)


def check_dcont_morphism(m, src, dst):
    """Checks a morphism of directed containers.

    On top of the container morphism typing:

      down-compat  t(down(s, q(s,p))) == down'(t s, p)
      root-compat  root(s) == q(s, root'(t s))
      plus-compat  plus(s, q(s,p), q(down(s, q(s,p)), p2)) == q(s, plus'(t s, p, p2))

    Both endpoints are expected to pass check_dcont_laws; instances whose
    lookups fail to resolve are skipped (typing violations cover them).
    """
    u = m.underlying
    base = check_cont_morphism(u, src.base, dst.base)
    vs = list(base.violations)
    t, q = u.shape_map, u.pos_map
    sf = fibers(src.base)
    df = fibers(dst.base)
    for s in src.base.shapes:
        ts = t.get(s)
        if ts not in dst.base.shapes:
            continue
        ro = dst.root.get(ts)
        if ro in df[ts]:
            lhs = src.root.get(s)
            rhs = q.get((s, ro))
            if lhs is not None and rhs is not None and lhs != rhs:
                vs.append(Violation("root-compat", (("s", s),), lhs=lhs, rhs=rhs))
        for p in df[ts]:
            qp = q.get((s, p))
            if qp not in sf[s]:
                continue
            d = src.down.get((s, qp))
            d2 = dst.down.get((ts, p))
            if d is not None and d2 is not None:
                lhs = t.get(d)
                if lhs is not None and lhs != d2:
                    vs.append(Violation("down-compat", (("s", s), ("p", p)), lhs=lhs, rhs=d2))
            if d2 is None or d2 not in dst.base.shapes or d is None or d not in src.base.shapes:
                continue
            for p2 in df[d2]:
                qp2 = q.get((d, p2))
                lhs = src.plus.get((s, qp, qp2)) if qp2 is not None else None
                tot = dst.plus.get((ts, p, p2))
                rhs = q.get((s, tot)) if tot is not None else None
                if lhs is not None and rhs is not None and lhs != rhs:
                    vs.append(Violation("plus-compat", (("s", s), ("p", p), ("p2", p2)),
                                        lhs=lhs, rhs=rhs))
    return report_from(vs)


def identity_dcont_morphism(dc):
    t = {s: s for s in dc.base.shapes}
    q = {(s, p): p for s in dc.base.shapes for p in dc.base.positions[s]}
    return DContMorphism(ContMorphism(t, q))


def compose_cont_morphisms(f, g):
    """Diagrammatic composition: f then g.  Raises on incompatible tables."""
    t = {}
    for s, mid in f.shape_map.items():
        if mid not in g.shape_map:
            raise StructureError("domain-mismatch", f"shape {mid!r} not in domain of second map")
        t[s] = g.shape_map[mid]
    q = {}
    for s, mid in f.shape_map.items():
        for (m2, p2), v in g.pos_map.items():
            if m2 != mid:
                continue
            if (s, v) not in f.pos_map:
                raise StructureError("domain-mismatch",
                                     f"position ({s!r}, {v!r}) not in domain of first map")
            q[(s, p2)] = f.pos_map[(s, v)]
    return ContMorphism(t, q)


def compose_dcont_morphisms(f, g):
    return DContMorphism(compose_cont_morphisms(f.underlying, g.underlying))


def _perm_candidates(pa, pb):
    # permutations of pb in lexicographic order, identity alignment first
    return itertools.permutations(pb) if len(pa) == len(pb) else ()


def find_isomorphism(a, b):
    """Searches for an isomorphism of directed containers.

    Returns (shape_bijection, per_shape_position_bijections) for the first
    match in canonical order, or None.  Both structures should be lawful.
    """
    sa = a.base.shapes.elements
    sb = b.base.shapes.elements
    if len(sa) != len(sb):
        return None
    pa = fibers(a.base)
    pb = fibers(b.base)
    shape_bij = {}
    pos_bij = {}
    used = set()

    def consistent():
        # check every constraint whose shapes are all assigned
        for s1, t1 in shape_bij.items():
            m1 = pos_bij[s1]
            if m1[a.root[s1]] != b.root[t1]:
                return False
            for p in pa[s1]:
                d = a.down[(s1, p)]
                if d not in shape_bij:
                    continue
                if shape_bij[d] != b.down[(t1, m1[p])]:
                    return False
                md = pos_bij[d]
                for p2 in pa[d]:
                    if m1[a.plus[(s1, p, p2)]] != b.plus[(t1, m1[p], md[p2])]:
                        return False
        return True

    def assign(i):
        if i == len(sa):
            return True
        s = sa[i]
        for tshape in sb:
            if tshape in used or len(pa[s]) != len(pb[tshape]):
                continue
            used.add(tshape)
            shape_bij[s] = tshape
            for perm in _perm_candidates(pa[s], pb[tshape]):
                pos_bij[s] = dict(zip(pa[s], perm))
                if consistent() and assign(i + 1):
                    return True
            del shape_bij[s]
            pos_bij.pop(s, None)
            used.discard(tshape)
        return False

    if assign(0):
        return dict(shape_bij), {s: dict(m) for s, m in pos_bij.items()}
    return None


def find_container_isomorphism(a, b):
    """Isomorphism of bare containers: any fiber-size-preserving bijection.

    Shapes are matched greedily in canonical order, positions by index.
    """
    sa, sb = a.shapes.elements, b.shapes.elements
    if len(sa) != len(sb):
        return None
    pa, pb = fibers(a), fibers(b)
    remaining = list(sb)
    shape_bij = {}
    pos_bij = {}
    for s in sa:
        match = next((t for t in remaining if len(pa[s]) == len(pb[t])), None)
        if match is None:
            return None
        remaining.remove(match)
        shape_bij[s] = match
        pos_bij[s] = dict(zip(pa[s], pb[match]))
    return shape_bij, pos_bij
