"""Smoke tests for the Python bindings: one happy path per operation."""

import pytest

import slt

GIFT = """
main = req -> map : req1(str) . map -> req : {
  yes1(str) . req -> issuer : req2(str) . issuer -> req : {
    yes2(nat) . req -> store : req3(nat) . store -> req : {
      yes3(str) . end,
      no3() . end
    },
    no2() . req -> store : no4() . end
  },
  no1() . req -> issuer : no5() . req -> store : no6() . end
};
"""


def test_version():
    assert slt.__version__ == "0.1.0"


def test_check_reports_nothing_on_well_formed_input():
    assert slt.check(GIFT) == []


def test_check_lists_faults():
    faults = slt.check("main = rec t . t;")
    assert len(faults) == 1
    assert "UNGUARDED_REC" in faults[0]


def test_canonical_is_stable():
    printed = slt.canonical(GIFT)
    assert printed.startswith("main = req -> map : req1(str)")
    assert slt.canonical(printed) == printed


def test_redundant_paths():
    assert slt.redundant_paths(GIFT) == ["req1/yes1/req2/no2", "req1/no1", "req1/no1/no5"]


def test_lighten_splits_and_preserves_traces():
    light = slt.lighten(GIFT)
    assert "let L1 = req -> store" in light
    assert "let L2 = req -> issuer" in light
    assert "call L2" in light
    equal, witness, side = slt.lang_eq(GIFT, light)
    assert equal and witness is None and side == 0


def test_eliminate_at_one_site():
    once = slt.eliminate_at(GIFT, "req1/yes1/req2/no2")
    assert "let L1 = req -> store" in once
    assert "no6" not in once  # erased on the way to the addressed site
    with pytest.raises(ValueError):
        slt.eliminate_at(GIFT, "req1/yes1")
    with pytest.raises(ValueError):
        slt.eliminate_at(GIFT, "a//b")


def test_traces_and_lang_eq_disagreement():
    listing = slt.traces("main = a -> b : ping() . end;")
    assert listing == ["<eps>", "tick"]
    equal, witness, side = slt.lang_eq(
        "main = a -> b : { x(nat) . end, y(nat) . end };", "main = a -> b : x(nat) . end;"
    )
    assert not equal
    assert witness == "a->b:y(nat)"
    assert side == 1


def test_emit_scribble():
    block = slt.emit_scribble("main = a -> b : hello(str) . end;", name="greet")
    assert block == "protocol greet(role a, role b) {\n  hello(str x1) from a to b;\n}\n"
