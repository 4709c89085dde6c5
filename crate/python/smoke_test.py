"""Smoke test for the `adelic` extension module.

Build and install first:  pip install --no-build-isolation ./crates/py
"""

import adelic


def main():
    e = adelic.Curve("E/GF(5):a4=4,a6=0")
    assert e.genus == 1
    d = e.divisor("(0,0)-O")
    dp = e.divisor("(1,0)-O")
    v = adelic.weil_pairing(d, dp, 2)
    assert str(v) == "4", v
    p, q = e.place("(0,0)"), e.place("(1,0)")
    assert adelic.weil_pairing_miller(p, q, 2) == v
    assert len(e.torsion_points(2)) == 4

    line = adelic.Curve("P1/GF(7)")
    f, g = line.function("t"), line.function("1-t")
    assert adelic.weil_reciprocity(f, g).is_one()
    assert f.divisor().degree == 0

    h0, h1, basis = e.divisor("3*O").riemann_roch()
    assert (h0, h1) == (3, 0) and len(basis) == 3

    try:
        e.divisor("(0,0)-O").certify_torsion(3)
    except adelic.TorsionError:
        pass
    else:
        raise AssertionError("(0,0) - O is not 3-torsion")

    s = adelic.Setup("A: 4\nN: 4\npair: 1\nB:\nC: 2\nB':\nC': 2\n")
    assert s.validate()[0]
    assert s.weil([1], [1], 2) == 2
    assert all(bad == 0 for _, _, bad in s.check([1, 2, 4]))

    code, out = adelic.run(["weil", "--curve", "E/GF(5):a4=4,a6=0", "--m", "2", "--D", "(0,0)-O", "--Dp", "(1,0)-O"])
    assert code == 0 and out.splitlines()[-1] == "4 (order 2)", out
    print("python smoke test passed")


if __name__ == "__main__":
    main()
