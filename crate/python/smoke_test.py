"""Smoke test for the Python extension.

Build and install first, e.g.

    pip install maturin
    maturin develop --release -m crates/py/Cargo.toml

then run `python python/smoke_test.py`.
"""

import json

import centracover as cc


def main():
    names = cc.catalog_names()
    assert len(names) >= 16, names

    s4 = cc.Group.from_catalog("s4")
    assert s4.order == 24 and len(s4) == 24
    assert s4.label(0) == "()"
    assert not s4.is_abelian()

    atlas = cc.Atlas(s4)
    assert len(atlas) == 13
    orders = sorted(len(atlas.centralizer(i)) for i in atlas.maximal_centralizers())
    assert orders == [3, 3, 3, 3, 8, 8, 8], orders
    assert len(atlas.minimal_centralizers()) == 10

    v = atlas.cover_verdict(atlas.maximal_centralizers())
    assert v["is_cover"] and v["is_irredundant"], v
    v = atlas.cover_verdict([0], side="centers")
    assert not v["is_cover"] and v["uncovered_witness"] is not None
    assert atlas.is_dominating(atlas.maximal_centralizers())

    q8 = cc.Group.from_json(cc.Group.from_catalog("q8").to_json())
    c = cc.Atlas(q8).classify()
    assert c["n_centralizers"] == 3 and c["is_f_group"] and c["is_ca_group"], c

    s3 = cc.Group.from_permutations(3, [[1, 0, 2], [1, 2, 0]])
    report = cc.Atlas(s3).verify()
    statuses = {t["id"]: t["status"] for t in report["theorems"]}
    assert set(statuses) == set(cc.registry_ids())
    assert "fail" not in statuses.values(), statuses

    analysis = cc.Atlas(cc.Group.from_catalog("heis27")).analyze()
    assert analysis["schema"] == "centracover/1"
    assert analysis["classification"]["n_mod_p"] == 1

    assert cc.Atlas(s4).dot_graph().startswith("graph gz")

    for bad in (lambda: cc.Group.from_catalog("nosuch"),
                lambda: cc.Atlas(cc.Group.from_permutations(3, [[1, 2, 0]])),
                lambda: cc.Group.from_json("{}")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print(json.dumps({"ok": True, "catalog": len(names)}))


if __name__ == "__main__":
    main()
