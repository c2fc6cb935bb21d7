"""Smoke tests for the _logva extension module.

Run directly (python test_smoke.py) or under ctest; exits nonzero on any
failure.
"""
import sys

import _logva


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)
    print("ok:", msg)


def main():
    check("vacuum" in _logva.suites(), "suite registry exposes vacuum")

    sf = _logva.Model("sf")
    check(sf.name == "sf", "model name")
    check(set(sf.generators()) == {"xi", "chi"}, "sf generators")
    check(sf.central_charge() == "-2", "sf central charge")
    check(sf.ope("xi", "chi") == "log(z) * |0>", "sf logarithmic OPE")
    tab = sf.ope_table("xi", "chi")
    check(tab == [(1, -1, [("|0>", "-1")])], "sf raw OPE table")
    check(sf.n_product("xi", "chi", 0) == "0", "sf regular product")

    fb = _logva.Model("fb:1")
    check(fb.central_charge() == "1", "fb central charge")
    check("log(z)" in fb.ope("xt", "xt"), "fb log OPE")
    check(fb.n_product("x", "xt", 0) == "|0>", "fb pairing")

    lat = _logva.Model("lat:1")
    check(lat.central_charge() == "1", "lattice central charge")
    check(lat.n_product("e1", "f1", 0) == "-1*|0>", "lattice cocycle sign")

    gl = _logva.Model("gl")
    check(gl.central_charge() == "0", "gl central charge")
    check(gl.n_product("L", "l", 3) == "1*b*|0>", "gl beta pairing")
    br = gl.bracket("L", 2, "l", -2, "vac")
    check(br["agree"], "gl bracket routes agree")
    check(br["direct"] == "1*b*|0>", "gl bracket value")

    tp = _logva.Model("tensor(sf,fb:1)")
    check(tp.central_charge() == "-1", "tensor central charge")

    rep = sf.check("units", 2)
    check(rep["ok"] and rep["pass"] > 0, "sf unit-product suite")
    rep = gl.check("vacuum", 2)
    check(rep["ok"], "gl vacuum suite")

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
