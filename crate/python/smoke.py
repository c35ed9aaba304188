"""Smoke test for the Python bindings.

Build first:
    cargo build --release -p monoclean-py --features extension-module
then run:
    python3 python/smoke.py [path/to/libmonoclean_py.so]
"""

import importlib.util
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load(lib):
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "monoclean.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("monoclean", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    lib = sys.argv[1] if len(sys.argv) > 1 else ROOT / "target/release/libmonoclean_py.so"
    mc = load(lib)

    i = mc.Ideal("x1^2, x1*x2", 2)
    assert str(i) == "x1^2, x1*x2"
    assert i.gens() == [[2, 0], [1, 1]]
    assert str(i.saturate()) == "x1"
    assert i.decompose() == ["x1", "x1^2, x2"]
    assert i.ass() == ["(x1)", "(x1, x2)"]
    assert not i.is_clean()
    assert i.is_pretty_clean()
    verdict = i.decide("pretty")
    assert verdict["holds"] and len(verdict["certificate"]["components"]) == 2
    assert i.filtration("clean") is None

    cycle = mc.Ideal("x1*x2, x2*x3, x3*x4, x4*x1")
    assert not cycle.is_pretty_clean()
    path = mc.Ideal("x1*x2, x2*x3, x3*x4")
    assert path.is_d_sequence("x4*x1")
    assert path.is_forest_type()
    assert mc.gcd_condition("x1*x2, x3*x4, x2*x3")
    assert not mc.gcd_condition("x1*x2, x2*x3, x3*x4")

    assert path.depth() == path.sdepth() == 2
    assert path.regularity() == 1 and path.h_regular() and path.stanley_inequality()
    table = i.betti()
    assert table["nvars"] == 2

    assert mc.generate(7, 3, 4) == mc.generate(7, 3, 4)
    report = mc.run_verify("thm33", seed=3, nvars=3, trials=20)
    assert report["pass"] and report["trials"] == 20

    try:
        mc.Ideal("x1^^2")
    except ValueError as e:
        assert "position 3" in str(e)
    else:
        raise AssertionError("parse error expected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
