"""End-to-end CLI runs: parsing, emission, exit codes, output shapes."""

import json
import re

import pytest
from hypothesis import given, settings, strategies as st

from dircont.cli import emit, emit_doc, parse_doc, run
from dircont.category import cat_to_dcont, dcont_to_cat
from dircont.constructions import OminusMap, coproduct_dcont, opposite_cat, opposite_dcont, tensor_dcont
from dircont.core import ContMorphism, DContMorphism
from dircont.examples import array_ominus, cyclic, cyclic_ominus, reader, saturating_nat, suffixes

from conftest import mk_container, rename_dcont

from dircont.category import PreOpMorphism, dmorph_to_preop


def put(tmp_path, name, x):
    path = tmp_path / name
    path.write_text(emit(x) if not isinstance(x, str) else x)
    return str(path)


def test_check_container_and_dcont(tmp_path):
    f = put(tmp_path, "c.json", suffixes(2).base)
    assert run(["check", f]) == (0, "ok")
    f = put(tmp_path, "dc.json", suffixes(2))
    assert run(["check", f]) == (0, "ok")


def test_check_reports_violations_with_line_format(tmp_path):
    dc = suffixes(1)
    bad = rename_dcont(dc, {s: s for s in dc.base.shapes},
                       {s: {p: p for p in dc.base.positions[s]} for s in dc.base.shapes})
    plus = dict(bad.plus)
    plus[("1", "0", "1")] = "0"  # break the left unit at shape 1
    from dircont.core import DirectedContainer
    f = put(tmp_path, "bad.json", DirectedContainer(bad.base, bad.down, bad.root, plus))
    code, text = run(["check", f])
    assert code == 1
    lines = text.splitlines()
    assert lines
    pat = re.compile(r"^[a-z-]+( [a-z0-9]+=\S+)+( lhs=\S+ rhs=\S+)?$")
    for line in lines:
        assert pat.match(line), line
    assert any(line.startswith("plus-left-unit s=1 p=1 lhs=0 rhs=1") for line in lines)


def test_check_cat(tmp_path):
    f = put(tmp_path, "cat.json", dcont_to_cat(cyclic(2)))
    assert run(["check", f]) == (0, "ok")


def test_check_on_morphism_file_is_usage_error(tmp_path):
    m = DContMorphism(ContMorphism({"0": "0"}, {("0", "0"): "0"}))
    f = put(tmp_path, "m.json", m)
    code, text = run(["check", f])
    assert code == 2 and "morphism" in text


def test_parse_failures(tmp_path):
    cases = [
        ("nofile", ["check", str(tmp_path / "missing.json")]),
        ("badjson", None), ("unkkind", None), ("unkkey", None),
        ("unkref", None), ("sep", None),
    ]
    f = put(tmp_path, "badjson.json", "{nope")
    assert run(["check", f])[0] == 2
    f = put(tmp_path, "unkkind.json", json.dumps({"kind": "mystery"}))
    assert run(["check", f])[0] == 2
    f = put(tmp_path, "unkkey.json", json.dumps(
        {"kind": "container", "shapes": ["s"], "positions": {"s": ["0"]}, "extra": 1}))
    code, text = run(["check", f])
    assert code == 2 and "unknown-key" in text
    f = put(tmp_path, "unkref.json", json.dumps(
        {"kind": "dcont", "shapes": ["s"], "positions": {"s": ["0"]},
         "down": {"s|0": "s"}, "root": {"s": "0"}, "plus": {"s|0|mystery": "0"}}))
    code, text = run(["check", f])
    assert code == 2 and "mystery" in text
    f = put(tmp_path, "sep.json", json.dumps(
        {"kind": "container", "shapes": ["s|t"], "positions": {}}))
    assert run(["check", f])[0] == 2
    assert run(["check", str(tmp_path / "missing.json")])[0] == 2


def test_partial_tables_are_checker_business_not_parse_errors(tmp_path):
    doc = {"kind": "dcont", "shapes": ["s"], "positions": {"s": ["0"]},
           "down": {}, "root": {}, "plus": {}}
    f = put(tmp_path, "partial.json", json.dumps(doc))
    code, text = run(["check", f])
    assert code == 1
    assert "table-incomplete" in text


def test_laws_comonad(tmp_path):
    f = put(tmp_path, "dc.json", cyclic(2))
    assert run(["laws", "--comonad", f]) == (0, "ok")
    assert run(["laws", "--comonad", f, "--labels", "2"]) == (0, "ok")
    assert run(["laws", f])[0] == 2  # the flag is required
    code, _ = run(["laws", "--comonad", f, "--labels", "-3"])
    assert code == 2


def test_to_cat_from_cat_round_trip(tmp_path):
    dc = suffixes(2)
    f = put(tmp_path, "dc.json", dc)
    code, text = run(["to-cat", f])
    assert code == 0
    assert parse_doc(json.loads(text)) == dcont_to_cat(dc)

    fcat = put(tmp_path, "cat.json", dcont_to_cat(dc))
    code, text = run(["from-cat", fcat])
    assert code == 0
    assert parse_doc(json.loads(text)) == cat_to_dcont(dcont_to_cat(dc))

    assert run(["to-cat", fcat])[0] == 2
    assert run(["from-cat", f])[0] == 2


def test_op_both_kinds(tmp_path):
    dc = cyclic(1)
    f = put(tmp_path, "dc.json", dc)
    code, text = run(["op", f])
    assert code == 0
    assert parse_doc(json.loads(text)) == opposite_dcont(dc)
    fcat = put(tmp_path, "cat.json", dcont_to_cat(dc))
    code, text = run(["op", fcat])
    assert code == 0
    assert parse_doc(json.loads(text)) == opposite_cat(dcont_to_cat(dc))


def test_coproduct_and_tensor(tmp_path):
    a, b = suffixes(1), cyclic(1)
    fa, fb = put(tmp_path, "a.json", a), put(tmp_path, "b.json", b)
    code, text = run(["coproduct", fa, fb])
    assert code == 0 and parse_doc(json.loads(text)) == coproduct_dcont(a, b)
    code, text = run(["tensor", fa, fb])
    assert code == 0 and parse_doc(json.loads(text)) == tensor_dcont(a, b)

    fcat = put(tmp_path, "cat.json", dcont_to_cat(a))
    assert run(["coproduct", fa, fcat])[0] == 2


def test_groupoid_subcommand(tmp_path):
    f = put(tmp_path, "cyc.json", cyclic(2))
    code, text = run(["groupoid", f])
    assert code == 0
    assert "(2,1) -> (2,2)" in text.splitlines()
    f = put(tmp_path, "suf.json", suffixes(2))
    assert run(["groupoid", f]) == (1, "not a groupoid")
    fcat = put(tmp_path, "cyccat.json", dcont_to_cat(cyclic(2)))
    code2, text2 = run(["groupoid", fcat])
    assert (code2, text2) == (code, text)


def test_enumerate_subcommand(tmp_path):
    f = put(tmp_path, "c12.json", mk_container({"s": ("e", "x")}))
    code, text = run(["enumerate", f])
    assert code == 0
    assert text.splitlines()[0] == "4 structures, 2 up to iso"

    code, text = run(["enumerate", f, "--groupoids-only"])
    assert code == 0
    assert text.splitlines()[0] == "2 structures, 1 up to iso"

    code, text = run(["enumerate", f, "--up-to-iso"])
    lines = text.splitlines()
    assert lines[0] == "4 structures, 2 up to iso"
    docs = json.loads("[" + ",".join(
        part for part in re.split(r"\n(?=\{)", "\n".join(lines[1:])) if part) + "]")
    assert len(docs) == 2
    for doc in docs:
        assert parse_doc(doc).base is not None

    code, _ = run(["enumerate", f, "--budget", "2"])
    assert code == 2

    fdc = put(tmp_path, "dc.json", cyclic(1))
    code, text = run(["enumerate", fdc])
    assert code == 0  # a dcont file enumerates over its underlying container


def test_morphism_check(tmp_path):
    src, dst = suffixes(2), saturating_nat(2)
    take = DContMorphism(ContMorphism(
        {s: "*" for s in src.base.shapes},
        {(s, p2): str(min(int(p2), int(s)))
         for s in src.base.shapes for p2 in dst.base.positions["*"]}))
    fm = put(tmp_path, "take.json", take)
    fs = put(tmp_path, "src.json", src)
    fd = put(tmp_path, "dst.json", dst)
    assert run(["morphism", "check", fm, fs, fd]) == (0, "ok")
    assert run(["morphism", "check", fm, fs, fd, "--comonad"]) == (0, "ok")
    assert run(["morphism", "check", fm, fs, fd, "--comonad", "--labels", "2"]) == (0, "ok")

    fsb = put(tmp_path, "srcbase.json", src.base)
    fdb = put(tmp_path, "dstbase.json", dst.base)
    assert run(["morphism", "check", fm, fsb, fdb]) == (0, "ok")

    bad = DContMorphism(ContMorphism(
        {s: s for s in src.base.shapes},
        {(s, p2): "0" for s in src.base.shapes for p2 in src.base.positions[s]}))
    fbad = put(tmp_path, "bad.json", bad)
    code, text = run(["morphism", "check", fbad, fs, fs])
    assert code == 1 and "down-compat" in text

    n = dmorph_to_preop(take)
    fn = put(tmp_path, "preop.json", n)
    fcs = put(tmp_path, "csrc.json", dcont_to_cat(src))
    fcd = put(tmp_path, "cdst.json", dcont_to_cat(dst))
    assert run(["morphism", "check", fn, fcs, fcd]) == (0, "ok")

    assert run(["morphism", "check", fn, fs, fd])[0] == 2
    assert run(["morphism", "check", fm, fcs, fcd])[0] == 2


def test_nat_trans_count(tmp_path):
    c1 = put(tmp_path, "one.json", mk_container({"s": ("0",)}))
    c2 = put(tmp_path, "two.json", mk_container({"s": ("0", "1")}))
    assert run(["nat-trans", "count", c1, c2]) == (0, "morphisms=1 oracle=1")
    assert run(["nat-trans", "count", c2, c1]) == (0, "morphisms=2 oracle=2")


def test_example_subcommand(tmp_path):
    code, text = run(["example", "cyclic", "--param", "2"])
    assert code == 0 and parse_doc(json.loads(text)) == cyclic(2)
    code, text = run(["example", "cyclic", "--param", "2", "--ominus"])
    assert code == 0 and parse_doc(json.loads(text)) == cyclic_ominus(2)
    code, text = run(["example", "reader", "--param", "a,b"])
    assert code == 0 and parse_doc(json.loads(text)) == reader(["a", "b"])
    assert run(["example", "suffixes", "--param", "2", "--ominus"])[0] == 2
    assert run(["example", "mystery", "--param", "1"])[0] == 2
    assert run(["example", "suffixes", "--param", "x"])[0] == 2


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["check"])[0] == 2


def test_emission_is_canonical_and_reparses():
    objects = [
        suffixes(2), cyclic(3).base, dcont_to_cat(cyclic(2)),
        DContMorphism(ContMorphism({"0": "0"}, {("0", "0"): "0"})),
        cyclic_ominus(2), array_ominus(["a", "b"]),
        dmorph_to_preop(DContMorphism(ContMorphism(
            {"0": "0", "1": "1"},
            {(s, p): p for s in ("0", "1") for p in ("0",) if True}))),
    ]
    for x in objects:
        text = emit(x)
        assert text == emit(x)
        assert parse_doc(json.loads(text)) == x


def test_emission_rejects_reserved_separator():
    from dircont.core import StructureError
    with pytest.raises(StructureError):
        emit(mk_container({"s|t": ("0",)}))


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_renamed_structures_round_trip_through_text(data):
    dc = data.draw(st.sampled_from([suffixes(1), cyclic(1), reader(["u", "v"])]))
    shapes = dc.base.shapes.elements
    smap = dict(zip(shapes, data.draw(st.permutations([f"N{i}" for i in range(len(shapes))]))))
    pmaps = {}
    for s in shapes:
        ps = dc.base.positions[s].elements
        pmaps[s] = dict(zip(ps, data.draw(st.permutations([f"Q{i}" for i in range(len(ps))]))))
    renamed = rename_dcont(dc, smap, pmaps)
    assert parse_doc(json.loads(emit(renamed))) == renamed
