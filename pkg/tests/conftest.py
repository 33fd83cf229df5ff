"""Shared fixtures and independent oracles.

candidate_structures is the unpruned reference: it writes out every total
well-typed (down, root, plus) table combination with no law filtering at
all, so tests can compare the production search against a filter over it
at tiny sizes, and can sweep the unlawful candidates too.

eval_law re-evaluates a reported violation directly from the tables,
independently of the checker's own control flow.
"""

import itertools

import pytest

from dircont.core import Container, DirectedContainer, FinSet, fibers


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)


def mk_container(spec):
    """spec maps shape name to a tuple of position names."""
    shapes = FinSet(tuple(spec))
    positions = {s: FinSet(tuple(ps)) for s, ps in spec.items()}
    return Container(shapes, positions)


@pytest.fixture
def c11():
    return mk_container({"s": ("0",)})


@pytest.fixture
def c12():
    return mk_container({"s": ("e", "x")})


@pytest.fixture
def c13():
    return mk_container({"s": ("0", "1", "2")})


@pytest.fixture
def c2_11():
    return mk_container({"a": ("0",), "b": ("0",)})


@pytest.fixture
def c2_12():
    return mk_container({"a": ("0",), "b": ("0", "1")})


def candidate_structures(c):
    """Every total well-typed structure candidate, lawful or not."""
    shapes = c.shapes.elements
    fib = fibers(c)
    down_cells = [(s, p) for s in shapes for p in fib[s]]
    for down_choice in itertools.product(shapes, repeat=len(down_cells)):
        down = dict(zip(down_cells, down_choice))
        plus_cells = [(s, p, p2) for (s, p) in down_cells for p2 in fib[down[(s, p)]]]
        for root_choice in itertools.product(*(fib[s] for s in shapes)):
            root = dict(zip(shapes, root_choice))
            for plus_choice in itertools.product(*(fib[s] for (s, _, _) in plus_cells)):
                plus = dict(zip(plus_cells, plus_choice))
                yield DirectedContainer(c, down, root, dict(plus))


def rename_dcont(dc, smap, pmaps):
    """Transports a structure along shape and per-shape position bijections."""
    fib = fibers(dc.base)
    shapes = FinSet(tuple(smap[s] for s in dc.base.shapes))
    positions = {smap[s]: FinSet(tuple(pmaps[s][p] for p in fib[s]))
                 for s in dc.base.shapes}
    down = {(smap[s], pmaps[s][p]): smap[dc.down[(s, p)]]
            for s in dc.base.shapes for p in fib[s]}
    root = {smap[s]: pmaps[s][dc.root[s]] for s in dc.base.shapes}
    plus = {}
    for s in dc.base.shapes:
        for p in fib[s]:
            d = dc.down[(s, p)]
            for p2 in fib[d]:
                plus[(smap[s], pmaps[s][p], pmaps[d][p2])] = pmaps[s][dc.plus[(s, p, p2)]]
    return DirectedContainer(Container(shapes, positions), down, root, plus)


def verify_iso(a, b, found):
    """Checks a claimed isomorphism directly against both table sets."""
    if found is None:
        return False
    smap, pmaps = found
    fa, fb = fibers(a.base), fibers(b.base)
    if sorted(smap) != sorted(a.base.shapes.elements):
        return False
    if sorted(smap.values()) != sorted(b.base.shapes.elements):
        return False
    for s in a.base.shapes:
        m = pmaps[s]
        if sorted(m) != sorted(fa[s]) or sorted(m.values()) != sorted(fb[smap[s]]):
            return False
        if b.root[smap[s]] != m[a.root[s]]:
            return False
        for p in fa[s]:
            d = a.down[(s, p)]
            if b.down[(smap[s], m[p])] != smap[d]:
                return False
            md = pmaps[d]
            for p2 in fa[d]:
                if b.plus[(smap[s], m[p], md[p2])] != m[a.plus[(s, p, p2)]]:
                    return False
    return True


def eval_law(dc, v):
    """Recomputes a violation from the raw tables; True when it is genuine.

    Hard lookups on purpose: if the witness cannot even be evaluated the
    violation is counted as not genuine, except for the structural codes
    whose whole point is a missing or spurious entry.
    """
    w = dict(v.witness)
    fib = fibers(dc.base)
    shapes = dc.base.shapes
    try:
        if v.law == "down-root":
            s = w["s"]
            return dc.down[(s, dc.root[s])] != s
        if v.law == "plus-left-unit":
            s, p = w["s"], w["p"]
            return dc.plus[(s, dc.root[s], p)] != p
        if v.law == "plus-right-unit":
            s, p = w["s"], w["p"]
            return dc.plus[(s, p, dc.root[dc.down[(s, p)]])] != p
        if v.law == "down-plus":
            s, p, p2 = w["s"], w["p"], w["p2"]
            return dc.down[(s, dc.plus[(s, p, p2)])] != dc.down[(dc.down[(s, p)], p2)]
        if v.law == "plus-assoc":
            s, p, p2, p3 = w["s"], w["p"], w["p2"], w["p3"]
            left = dc.plus[(s, dc.plus[(s, p, p2)], p3)]
            right = dc.plus[(s, p, dc.plus[(dc.down[(s, p)], p2, p3)])]
            return left != right
        if v.law == "table-incomplete":
            t = w["table"]
            if t == "root":
                return w["s"] not in dc.root
            if t == "down":
                return (w["s"], w["p"]) not in dc.down
            if t == "plus":
                return (w["s"], w["p"], w["p2"]) not in dc.plus
            return False
        if v.law == "root-typed":
            return dc.root[w["s"]] not in fib[w["s"]]
        if v.law == "down-typed":
            return dc.down[(w["s"], w["p"])] not in shapes
        if v.law == "plus-typed":
            return dc.plus[(w["s"], w["p"], w["p2"])] not in fib[w["s"]]
        if v.law == "root-domain":
            return w["s"] not in shapes
        if v.law == "down-domain":
            s, p = w["s"], w["p"]
            return s not in shapes or p not in fib.get(s, ())
        if v.law == "plus-domain":
            s, p, p2 = w["s"], w["p"], w["p2"]
            if s not in shapes or p not in fib.get(s, ()):
                return True
            d = dc.down.get((s, p))
            return d not in shapes or p2 not in fib[d]
    except KeyError:
        return False
    return False
