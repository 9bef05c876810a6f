#!/usr/bin/env python3
"""Smoke test for the sympow_py extension module.

Build the extension first:

    cargo build --release -p sympow-py

then run this script with the repository root as the working directory (or
from anywhere; paths are resolved relative to this file).
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libsympow_py.so",
        ROOT / "target" / "debug" / "libsympow_py.so",
        ROOT / "target" / "release" / "libsympow_py.dylib",
        ROOT / "target" / "debug" / "libsympow_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run: cargo build --release -p sympow-py")
    staging = Path(tempfile.mkdtemp(prefix="sympow_py_"))
    suffix = ".so" if built.suffix == ".so" else ".so"
    shutil.copy2(built, staging / f"sympow_py{suffix}")
    sys.path.insert(0, str(staging))
    import sympow_py

    return sympow_py


def main():
    sp = load_module()

    # fields and exact scalars
    gf11 = sp.Field("GF(11)")
    assert gf11.characteristic() == 11
    assert gf11.roots_of_klein_quadratic() == ["4", "6"]
    assert sp.Field("Q").roots_of_klein_quadratic() == []

    # polynomial arithmetic is exact and printable
    q = sp.Field("Q")
    x_plus_y = sp.Polynomial(q, "x + y")
    x_minus_y = sp.Polynomial(q, "x - y")
    assert x_plus_y * x_minus_y == sp.Polynomial(q, "x^2 - y^2")
    half = sp.Polynomial(q, "1/2 x + 1/3 x")
    assert str(half) == "5/6*x"
    f = sp.Polynomial(q, "x*y^3 - x*z^3")
    assert f.evaluate(["1", "1", "1"]) == "0"

    # ideal toolkit
    star = sp.Ideal(q, ["x*y", "x*z", "y*z"])
    assert star.multiplicity() == 3
    assert star.contains("x*y*z")
    assert not star.contains("x^2")
    assert star.power(2).saturate_irrelevant().equals(star.symbolic_power(2))

    # containment verdicts: the positive control and a counterexample
    report = sp.check("star3")
    assert report["agreement"] is True
    assert all(r["contained"] for r in report["results"])

    report = sp.check("fermat:3")
    assert report["agreement"] is True
    assert not any(r["contained"] for r in report["results"])

    report = sp.check("klein", method="criterion")
    assert report["results"][0]["contained"] is False

    # the Klein configuration data
    report = sp.points("klein")
    pts = report["points"]
    assert pts["count"] == 49
    assert pts["incidence"] == {"3": 28, "4": 21}
    assert pts["multiplicity"] == 49

    # Hilbert-Burch column degrees for Klein: 3 and 5
    report = sp.syzygy("klein")
    assert (report["syzygy"]["d0"], report["syzygy"]["d1"]) == (3, 5)

    # witness products for the dual Hesse configuration
    report = sp.witness("fermat:3")
    full, reduced = report["witness_info"]["products"]
    assert full["in_symbolic"] and full["in_ordinary"]
    assert reduced["in_symbolic"] and not reduced["in_ordinary"]

    print("sympow_py smoke test: OK")


if __name__ == "__main__":
    main()
