"""Smoke test for the ccwidth extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

import ccwidth


def main():
    # 5-cycle: not an incomparability graph, width 2 with the best cover
    c5 = ccwidth.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.n == 5 and c5.edge_count() == 5
    assert ccwidth.Graph.parse(c5.serialize("json")) == c5

    w, cover = ccwidth.ccw_exact(c5)
    assert cover.width(c5) == w
    assert not cover.violations(c5)

    s, star = ccwidth.s_exact(c5)
    assert s == 2 and star.check(c5) is None

    d = ccwidth.decompose(c5, cover)
    assert len(d) == max(w, 1)
    assert all(passed for _, passed, _ in d.verify(c5).values())
    assert ccwidth.Decomposition.from_json(d.to_json()).width == d.width

    assert ccwidth.find_transitive_orientation(c5.complement()) is None

    g, o = ccwidth.random_poset_graph(40, 0.3, 7)
    assert o.is_transitive()
    lo, hi, gc, _ = ccwidth.ccw_two_approx(g, o)
    assert lo <= hi <= 2 * lo or hi <= 1
    assert gc.width(g) == hi

    assert ccwidth.ramsey_lookup([3, 3]) == {"kind": "exact", "value": 6}
    assert ccwidth.corollary_bound(2)["value"] == 9

    try:
        ccwidth.Graph.parse("p 3 1\n0 0\n", "edge-list")
    except ccwidth.ParseError:
        pass
    else:
        raise AssertionError("self-loop accepted")

    try:
        ccwidth.ccw_exact(ccwidth.Graph(30), max_n=10)
    except ccwidth.LimitExceededError:
        pass
    else:
        raise AssertionError("limit not enforced")

    print("ok:", repr(c5), repr(cover), repr(d))


if __name__ == "__main__":
    main()
