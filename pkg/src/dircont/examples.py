"""Stock directed container families used throughout the tests and CLI.

All of them are finite.  suffixes(n) is the nonempty-list container of
bound n with suffix translation; cyclic(n) shares its underlying container
but rotates positions instead of dropping them.  reader and array are the
one-position-per-shape and all-shapes-as-positions families over a fixed
shape set.  saturating_nat(n) is a single-shape family whose positions add
with saturation at n, a finite stand-in for the additive monoid of the
naturals.
"""

from .core import Container, DirectedContainer, FinSet, StructureError
from .constructions import OminusMap

FAMILIES = ("suffixes", "cyclic", "reader", "array", "saturating-nat")


def _range_set(n, name):
    return FinSet(tuple(str(i) for i in range(n + 1)), name)


def _nelist_base(n):
    shapes = _range_set(n, "shapes")
    positions = {s: _range_set(int(s), f"P({s})") for s in shapes}
    return Container(shapes, positions)


def suffixes(n):
    base = _nelist_base(n)
    down = {(s, p): str(int(s) - int(p)) for s in base.shapes for p in base.positions[s]}
    root = {s: "0" for s in base.shapes}
    plus = {}
    for s in base.shapes:
        for p in base.positions[s]:
            for p2 in base.positions[down[(s, p)]]:
                plus[(s, p, p2)] = str(int(p) + int(p2))
    return DirectedContainer(base, down, root, plus)


def cyclic(n):
    base = _nelist_base(n)
    down = {(s, p): s for s in base.shapes for p in base.positions[s]}
    root = {s: "0" for s in base.shapes}
    plus = {}
    for s in base.shapes:
        k = int(s) + 1
        for p in base.positions[s]:
            for p2 in base.positions[s]:
                plus[(s, p, p2)] = str((int(p) + int(p2)) % k)
    return DirectedContainer(base, down, root, plus)


def cyclic_ominus(n):
    dc = cyclic(n)
    table = {}
    for s in dc.base.shapes:
        k = int(s) + 1
        for p in dc.base.positions[s]:
            table[(s, p)] = str((-int(p)) % k)
    return OminusMap(table)


def reader(names):
    shapes = FinSet(tuple(names), "shapes")
    positions = {s: FinSet(("*",), f"P({s})") for s in shapes}
    base = Container(shapes, positions)
    down = {(s, "*"): s for s in shapes}
    root = {s: "*" for s in shapes}
    plus = {(s, "*", "*"): "*" for s in shapes}
    return DirectedContainer(base, down, root, plus)


def reader_ominus(names):
    return OminusMap({(s, "*"): "*" for s in names})


def array(names):
    shapes = FinSet(tuple(names), "shapes")
    positions = {s: shapes for s in shapes}
    base = Container(shapes, positions)
    down = {(s, p): p for s in shapes for p in shapes}
    root = {s: s for s in shapes}
    plus = {(s, p, p2): p2 for s in shapes for p in shapes for p2 in shapes}
    return DirectedContainer(base, down, root, plus)


def array_ominus(names):
    return OminusMap({(s, p): s for s in names for p in names})


def saturating_nat(n):
    shapes = FinSet(("*",), "shapes")
    positions = {"*": _range_set(n, "P(*)")}
    base = Container(shapes, positions)
    down = {("*", p): "*" for p in positions["*"]}
    root = {"*": "0"}
    plus = {("*", p, p2): str(min(int(p) + int(p2), n))
            for p in positions["*"] for p2 in positions["*"]}
    return DirectedContainer(base, down, root, plus)


def suffixes_opposite_simplified(n):
    """The opposite of suffixes(n) in its direct presentation.

    Shapes are 0..n, a position p at shape s points p steps up, so
    down(s, p) = s + p, the root is 0 and translation is flipped addition.
    Bounded at n, it is isomorphic to opposite_dcont(suffixes(n)).
    """
    shapes = _range_set(n, "shapes")
    positions = {s: _range_set(n - int(s), f"P({s})") for s in shapes}
    base = Container(shapes, positions)
    down = {(s, p): str(int(s) + int(p)) for s in shapes for p in positions[s]}
    root = {s: "0" for s in shapes}
    plus = {}
    for s in shapes:
        for p in positions[s]:
            for p2 in positions[down[(s, p)]]:
                plus[(s, p, p2)] = str(int(p2) + int(p))
    return DirectedContainer(base, down, root, plus)


def _int_param(params):
    try:
        n = int(params)
    except (TypeError, ValueError):
        raise StructureError("bad-params", f"expected a nonnegative integer, got {params!r}")
    if n < 0:
        raise StructureError("bad-params", f"expected a nonnegative integer, got {n}")
    return n


def _names_param(params):
    if isinstance(params, str):
        names = [x for x in params.split(",") if x]
    else:
        names = list(params)
    if not names:
        raise StructureError("bad-params", "expected a nonempty list of shape names")
    if len(set(names)) != len(names):
        raise StructureError("bad-params", f"shape names must be distinct: {names}")
    return names


def make_example(name, params):
    """Builds a family member; returns (structure, ominus or None).

    The second component is the positionwise inverse table for the families
    that carry one (cyclic, reader, array).
    """
    if name == "suffixes":
        return suffixes(_int_param(params)), None
    if name == "cyclic":
        n = _int_param(params)
        return cyclic(n), cyclic_ominus(n)
    if name == "reader":
        names = _names_param(params)
        return reader(names), reader_ominus(names)
    if name == "array":
        names = _names_param(params)
        return array(names), array_ominus(names)
    if name == "saturating-nat":
        return saturating_nat(_int_param(params)), None
    raise StructureError("unknown-family", f"no example family named {name!r}")
