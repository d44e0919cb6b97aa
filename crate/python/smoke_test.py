"""Smoke test for the `frieze` extension module.

Build and run from the repository root:

    cargo build -p frieze-py --release --features extension-module
    cp target/release/libfrieze.so python/frieze.so
    python3 python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import frieze  # noqa: E402

Q = frieze.QuidditySequence


def main():
    q = Q([4, 1, 2, 5])
    assert q.reduce_to_skeletal() == Q([2, 4])
    assert Q.parse("(1,1,1)").classify() == "FiniteType"
    assert Q([1, 2]).classify() == "Invalid"
    assert Q([2, 3, 3]).partner().cyclically_equal(Q([3, 4]))
    assert Q([2, 3, 3]).block_form() == [(3, 0), (3, 1)]

    five = Q([2, 3, 4, 2, 4])
    assert five.growth_coefficient("rows") == 87
    assert five.growth_coefficient("formula") == 87
    assert sorted(five.rows(2)[1]) == [5, 7, 7, 7, 11]
    assert Q([4, 3, 4, 3]).growth_sequence(2) == [10, 98]
    assert frieze.growth_closed_form(10, 2) == 98
    assert json.loads(five.growth_report())["s_q"] == 87

    big = Q([10**12, 10**12 + 1]).growth_coefficient()
    assert big == 10**12 * (10**12 + 1) - 2

    quiver = frieze.NonOrientedCycle("IIDIDDDID")
    assert quiver.sigma() == Q([4, 3, 2, 2, 3])
    assert quiver.sigma_tilde() == Q([2, 3, 5, 3])
    assert Q([4, 3, 2, 2, 3]).quiver().is_isomorphic(quiver)

    t = Q([2, 3, 3]).triangulation()
    outer, inner = t.quiddity_pair()
    assert outer == Q([2, 3, 3]) and inner.cyclically_equal(Q([3, 4]))
    assert len(t.arcs) == 5
    assert t.render_svg().count('class="arc"') == 5
    assert frieze.SkeletalTriangulation.from_json(t.to_json()).arcs == t.arcs

    eared = frieze.attach_ear(Q([2, 3, 3]), Q([3, 4]), "outer", 0)
    assert eared[0] == Q([3, 1, 4, 3])
    assert frieze.detach_ear(eared[0], eared[1], "outer", 1)[0] == Q([2, 3, 3])

    assert five.repth_rhs(1, 5) == 87
    assert five.check_tube("ar", 10) == []
    assert frieze.cyclic_pair_excluding_count(6) == 17

    try:
        Q([2, 2, 2]).partner()
    except frieze.FriezeError as e:
        assert str(e).startswith("NotSkeletal")
    else:
        raise AssertionError("trivial sequence has no partner")

    for name, cases, failures in frieze.verify_all(seed=3):
        assert failures == 0, (name, cases, failures)

    print("smoke test passed")


if __name__ == "__main__":
    main()
