"""Brute-force enumeration of directed container structures and morphisms.

The structure search walks root tables, then down tables, then fills the
translation table cell by cell.  Unit laws go first: the root rows of plus
are forced outright, down at the root is pinned, and each remaining cell
assignment is checked against the down-plus law immediately and against
every associativity instance whose participating cells are already fixed.
Everything that survives is re-checked wholesale before being emitted, so
the pruning can only lose candidates, never invent them; a test compares
against an unpruned reference search at tiny sizes.

Budgets guard against accidental blowups.  The estimated cost is the
number of (root, down) table combinations times the worst-case size of
one translation table; exceeding the budget raises instead of running.
"""

import itertools
from math import prod

from .core import (DContMorphism, ContMorphism, DirectedContainer, NotLawfulError,
                   StructureError, check_dcont_laws, check_dcont_morphism, fibers,
                   find_isomorphism, validate_container)

DEFAULT_BUDGET = 10 ** 8


def structure_space(c):
    """Budget estimate: down tables x root tables x plus cells (worst case)."""
    fib = fibers(c)
    shapes = c.shapes.elements
    n_pos = sum(len(fib[s]) for s in shapes)
    maxfib = max((len(fib[s]) for s in shapes), default=0)
    return (len(shapes) ** n_pos) * prod(len(fib[s]) for s in shapes) * (n_pos * maxfib)


def enum_structures(c, budget=DEFAULT_BUDGET):
    """All lawful (down, root, plus) structures on c, canonically ordered."""
    rep = validate_container(c)
    if not rep.passed:
        raise NotLawfulError(rep, "enumeration needs a valid container")
    space = structure_space(c)
    if space > budget:
        raise StructureError("budget-exceeded",
                             f"candidate space {space} exceeds budget {budget}")
    shapes = c.shapes.elements
    fib = fibers(c)
    down_cells = [(s, p) for s in shapes for p in fib[s]]
    results = []
    for root_choice in itertools.product(*(fib[s] for s in shapes)):
        root = dict(zip(shapes, root_choice))
        pools = [(s,) if p == root[s] else shapes for (s, p) in down_cells]
        for down_choice in itertools.product(*pools):
            down = dict(zip(down_cells, down_choice))
            _fill_plus(c, shapes, fib, root, down, results)
    results.sort(key=_canonical_key)
    return results


def _fill_plus(c, shapes, fib, root, down, results):
    # root rows are identities, right units are pinned; conflicts kill the candidate
    forced = {}
    for s in shapes:
        for p in fib[s]:
            forced[(s, root[s], p)] = p
    for (s, p) in down:
        cell = (s, p, root[down[(s, p)]])
        if forced.setdefault(cell, p) != p:
            return
    plus = dict(forced)

    def l2_ok(cell, v):
        s, p, p2 = cell
        return down[(s, v)] == down[(down[(s, p)], p2)]

    for cell, v in forced.items():
        if not l2_ok(cell, v):
            return

    all_cells = [(s, p, p2)
                 for s in shapes for p in fib[s] for p2 in fib[down[(s, p)]]]
    free = [cell for cell in all_cells if cell not in forced]

    # associativity instances, attached to their two statically known cells
    instances = []
    for s in shapes:
        for p in fib[s]:
            d = down[(s, p)]
            for p2 in fib[d]:
                d2 = down[(d, p2)]
                for p3 in fib[d2]:
                    instances.append(((s, p, p2), (d, p2, p3), s, p, p3))
    by_cell = {}
    for idx, inst in enumerate(instances):
        by_cell.setdefault(inst[0], []).append(idx)
        by_cell.setdefault(inst[1], []).append(idx)

    def assoc_ok(idx):
        a, cc, s, p, p3 = instances[idx]
        va = plus.get(a)
        vc = plus.get(cc)
        if va is None or vc is None:
            return True
        left = plus.get((s, va, p3))
        right = plus.get((s, p, vc))
        if left is None or right is None:
            return True
        return left == right

    def fill(i):
        if i == len(free):
            if all(assoc_ok(idx) for idx in range(len(instances))):
                cand = DirectedContainer(c, dict(down), dict(root), dict(plus))
                if check_dcont_laws(cand).passed:
                    results.append(cand)
            return
        cell = free[i]
        s = cell[0]
        for v in fib[s]:
            plus[cell] = v
            if l2_ok(cell, v) and all(assoc_ok(idx) for idx in by_cell.get(cell, ())):
                fill(i + 1)
            del plus[cell]

    fill(0)


def _canonical_key(dc):
    shapes = dc.base.shapes.elements
    sidx = {s: i for i, s in enumerate(shapes)}
    fib = fibers(dc.base)
    pidx = {s: {p: i for i, p in enumerate(fib[s])} for s in shapes}
    down_seq = tuple(sidx[dc.down[(s, p)]] for s in shapes for p in fib[s])
    root_seq = tuple(pidx[s][dc.root[s]] for s in shapes)
    plus_seq = tuple(pidx[s][dc.plus[(s, p, p2)]]
                     for s in shapes for p in fib[s]
                     for p2 in fib[dc.down[(s, p)]])
    return down_seq, root_seq, plus_seq


def morphism_space(src, dst):
    """Number of candidate (t, q) tables; choices are independent per shape."""
    fib, fib2 = fibers(src.base), fibers(dst.base)
    total = 1
    for s in src.base.shapes:
        total *= sum(len(fib[s]) ** len(fib2[s2]) for s2 in dst.base.shapes)
    return total


def enum_morphisms(src, dst, budget=DEFAULT_BUDGET):
    """All lawful morphisms from src to dst, in canonical table order."""
    for dc in (src, dst):
        rep = check_dcont_laws(dc)
        if not rep.passed:
            raise NotLawfulError(rep, "morphism enumeration needs lawful endpoints")
    space = morphism_space(src, dst)
    if space > budget:
        raise StructureError("budget-exceeded",
                             f"candidate space {space} exceeds budget {budget}")
    fib, fib2 = fibers(src.base), fibers(dst.base)
    shapes = src.base.shapes.elements
    out = []
    for tchoice in itertools.product(dst.base.shapes.elements, repeat=len(shapes)):
        t = dict(zip(shapes, tchoice))
        cells = [(s, p2) for s in shapes for p2 in fib2[t[s]]]
        for values in itertools.product(*(fib[s] for s, _ in cells)):
            m = DContMorphism(ContMorphism(t, dict(zip(cells, values))))
            if check_dcont_morphism(m, src, dst).passed:
                out.append(m)
    return out


def quotient_by_iso(structures):
    """First-seen representatives of the isomorphism classes, input order."""
    reps = []
    for dc in structures:
        if not any(find_isomorphism(rep, dc) is not None for rep in reps):
            reps.append(dc)
    return reps
