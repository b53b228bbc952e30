"""Smoke test for the pydnlat extension module.

Build and load it with:

    cargo build -p dnlat-py --features extension-module --release
    cp target/release/libpydnlat.so python/pydnlat.so
    python3 python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pydnlat  # noqa: E402


def main():
    assert pydnlat.det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
    d, u, v = pydnlat.snf([[2, 4], [6, 8]])
    assert d == [[2, 0], [0, 4]], d
    k = pydnlat.kernel_basis([[1, 1, 1]])
    assert len(k) == 3 and len(k[0]) == 2

    m = pydnlat.Lattice.by_name("m_plus", 3)
    assert m.rank == 3 and m.is_valid()
    assert m.sigma == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    back = pydnlat.Lattice.from_json(m.to_json())
    assert back.sigma == m.sigma and back.tau == m.tau
    assert json.loads(m.to_json())["rank"] == 3

    rab = pydnlat.Lattice.by_name("Rab", 2)
    assert rab.rank == 5 and rab.is_faithful()
    assert rab.cohomology("dih:1:0")[0] == "Z/2"
    assert rab.is_coflabby() and not rab.is_flabby()
    assert all(row["h1"] == "0" for row in rab.profile())

    r = pydnlat.run_check("relation-module-decomposition", 5)
    assert r["status"] == "pass", r
    v = pydnlat.verdict(7)
    assert v["stably_rational"] is True
    assert pydnlat.verdict(4)["stably_rational"] is False

    try:
        pydnlat.Lattice.by_name("m_plus", 4)
    except ValueError:
        pass
    else:
        raise AssertionError("even n accepted")
    print("pydnlat smoke test passed:", len(pydnlat.check_ids()), "checks,", len(pydnlat.lattice_names()), "lattices")


if __name__ == "__main__":
    main()
