#!/usr/bin/env python3
"""Smoke test for the minmult_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/
(release preferred), exposes it as an importable module, and exercises
the main types and operations end to end.

    cargo build -p minmult-py --release
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        ROOT / "target" / "release" / "libminmult_py.so",
        ROOT / "target" / "debug" / "libminmult_py.so",
        ROOT / "target" / "release" / "libminmult_py.dylib",
        ROOT / "target" / "debug" / "libminmult_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "extension not built; run `cargo build -p minmult-py --release` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="minmult-py-"))
    target = stage / ("minmult_py" + (".so" if built.suffix == ".so" else ".so"))
    shutil.copyfile(built, target)
    sys.path.insert(0, str(stage))
    import minmult_py

    return minmult_py


def main():
    m = import_module()

    # The golden 5-vertex complex.
    hanano = m.SimplicialComplex(
        5, [[1, 2, 3], [1, 3, 4], [1, 4, 5], [2, 3, 5], [2, 4, 5]]
    )
    assert hanano.dim() == 2 and hanano.is_pure()
    assert hanano.f_vector() == [1, 5, 10, 5]
    assert hanano.h_vector() == [1, 2, 3, -1]
    assert len(hanano.minimal_nonfaces()) == 5

    report = hanano.analyze()
    assert report["multiplicity"] == "5"
    assert report["dimension"] == "3"
    assert report["codimension"] == "2"
    assert report["a_invariant"] == "-2"
    assert report["buchsbaum"] == "yes"
    assert report["minimal_multiplicity"] == "yes"
    assert report["minimal_multiplicity_degree"] == "3"
    verdicts = {c["name"]: c["verdict"] for c in report["checks"]}
    assert verdicts["multiplicity-lower-bound"] == "equality"
    assert verdicts["sr-minimal-multiplicity"] == "holds"
    assert verdicts["kamoi-vogel"] == "equality"

    # Alexander duality round trip and canonical forms.
    edges = m.SimplicialComplex(4, [[1, 3], [2, 4]])
    cycle = edges.alexander_dual()
    assert sorted(map(sorted, cycle.facets)) == [[1, 2], [1, 4], [2, 3], [3, 4]]
    c4 = m.cyclic_polytope(4, 2)
    assert c4.canonical_form() == cycle.canonical_form()
    assert c4.canonical_form() != edges.canonical_form()

    # Links.
    link = hanano.link([1])
    assert link.dim() == 1 and len(link.facets) == 3

    # Monomial ideals: the depth-zero family 𝔑·(X1,X2)^2.
    goto = m.MonomialIdeal(
        ["X1", "X2", "Y1", "Y2"],
        [
            "X1^3", "X1^2*X2", "X1*X2^2", "X2^3",
            "X1^2*Y1", "X1*X2*Y1", "X2^2*Y1",
            "X1^2*Y2", "X1*X2*Y2", "X2^2*Y2",
        ],
    )
    assert goto.initial_degree() == 3
    dim, mult, numerator = goto.hilbert()
    assert (dim, mult) == (2, "3")
    report = goto.analyze()
    assert report["depth"] == "0"
    assert report["buchsbaum"] == "yes"
    assert report["minimal_multiplicity_degree"] == "3"
    h0 = sum(int(v) for _, v in report["h0_dims"])
    assert h0 == 3

    # Squarefree ideals route through the simplicial dictionary.
    crossing = m.MonomialIdeal(["A", "B", "C", "D"], [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert crossing.is_squarefree()
    rep = crossing.analyze()
    assert rep["buchsbaum"] == "yes"
    assert any("dictionary" in p for p in rep["provenance"])

    # Saturation: Y^2·(X, Y) saturates to (Y^2).
    small = m.MonomialIdeal(["X", "Y"], ["X*Y^2", "Y^3"])
    assert small.saturation().generators == ["Y^2"]

    # Family generation with golden expectations.
    fam = m.generate_family("goto_family", c=2, d=2, q=3)
    assert fam["kind"] == "ideal"
    expected = dict(fam["expected"])
    assert expected["e"] == "3" and expected["minimal_multiplicity_degree"] == "3"
    rep = fam["object"].analyze()
    assert rep["multiplicity"] == expected["e"]
    assert rep["depth"] == expected["depth"]

    fam = m.generate_family("cyclic_dual", q=3, d=3)
    assert fam["kind"] == "complex"
    assert fam["object"].vertices == 5
    assert fam["object"].canonical_form() == hanano.canonical_form()

    # Exact rational bound.
    assert Fraction(m.h_max_bound(2, 3, 3)) == 1
    assert Fraction(m.h_max_bound(3, 4, 2)) == Fraction(3, 4)

    # Census reproduces the golden class.
    census = m.run_census(5, 2, require_minimal=True)
    assert len(census["rows"]) >= 1
    assert any(
        r["d"] == "3" and r["c"] == "2" and r["q"] == "3" and r["h"] == "1"
        for r in census["rows"]
    )

    # Negative control: the e-points ring is CM, not minimal multiplicity.
    points = m.SimplicialComplex(3, [[1], [2], [3]])
    rep = points.analyze()
    assert rep["cohen_macaulay"] is True
    assert rep["minimal_multiplicity"] == "no"

    print("smoke test: all assertions passed")


if __name__ == "__main__":
    main()
