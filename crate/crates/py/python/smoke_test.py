"""Smoke test for the numsg extension module."""

import numsg


def main():
    s = numsg.NumericalSet.from_generators([5, 7, 9])
    assert s.frobenius == 13 and s.genus == 8 and s.multiplicity == 5
    assert s.pseudo_frobenius() == [11, 13]
    assert s.type == 2
    assert s.minimal_generators() == [5, 7, 9]
    assert not s.is_almost_symmetric()
    assert s.t_set() == numsg.NumericalSet.parse("gaps=1,3,4,6,8")
    assert s.t_chain()[-1] == numsg.NumericalSet()
    assert 10 in s and 11 not in s

    h = numsg.NumericalSet([1, 2, 4, 7])
    assert h.is_semigroup and h.is_symmetric() and h.type == 1
    assert str(h) == "gaps=1,2,4,7"
    assert repr(h) == "NumericalSet('gaps=1,2,4,7')"
    assert len({h, numsg.NumericalSet.parse("gens=3,5")}) == 1

    not_closed = numsg.NumericalSet([2, 3])
    assert not not_closed.is_semigroup
    assert not_closed.associated() == numsg.NumericalSet([1, 2, 3])
    try:
        not_closed.is_symmetric()
    except ValueError as e:
        assert "closed" in str(e) or "not" in str(e)
    else:
        raise AssertionError("expected ValueError")

    assert [numsg.count_by_genus(g) for g in range(1, 8)] == [1, 2, 4, 7, 12, 23, 39]
    assert numsg.parity_by_frobenius(20)[20] == (368, 532)
    assert numsg.parity_by_genus(13)[13] == (552, 449)
    counts = numsg.type_counts_by_frobenius(12)
    assert all(counts[(f, f - 2)] == 1 for f in range(3, 13))

    members = numsg.family_as(19, 0)
    assert len(members) == 4 and all(m.is_almost_symmetric() for m in members)
    assert numsg.family_summary("as", 19, 1) == (2, [5], True)
    gen = numsg.family_general(23, 1, "43/100+1/1000000")
    assert len(gen) == 4 and {m.type for m in gen} == {2}
    try:
        numsg.family_as(10, 1)
    except ValueError as e:
        assert "6k+6" in str(e)
    else:
        raise AssertionError("expected ValueError")

    rows = numsg.verify("fast")
    assert rows and all(passed for _, passed, _, _ in rows)
    print("numsg smoke test passed: %d checks" % len(rows))


if __name__ == "__main__":
    main()
