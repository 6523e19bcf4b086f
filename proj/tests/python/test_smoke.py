import pytest

import symmid


def example12():
    return symmid.Ideal(3, [[2, 1, 1], [4, 2]])


def test_partition_helpers():
    assert symmid.conjugate([4, 2, 1]) == [3, 2, 1, 1]
    assert symmid.truncate_columns([4, 2, 1], 2) == [2, 2, 1]
    assert symmid.strip_columns([3, 3], 1) == [2, 2]
    assert symmid.leq([1, 1], [2, 1])
    assert symmid.sup([3, 1], [2, 2]) == [3, 2]
    assert symmid.dominance_leq([3, 3], [6, 3])
    assert len(symmid.orbit([1, 1], 3)) == 3
    assert symmid.enumerate_box_partitions(1, 2, 1) == [[1, 1], [1]]


def test_ideal_roundtrip():
    ideal = example12()
    assert ideal.n == 3
    assert ideal.generators == [[2, 1, 1], [4, 2]]
    assert ideal.contains([2, 1, 1])
    assert not ideal.contains([2, 0, 0])
    assert ideal.saturate(1).generators == [[1, 1, 1], [2, 2]]
    assert ideal.hilbert_function(3)[:3] == [1, 3, 6]


def test_lattice_helpers():
    ideal = example12()
    assert ideal.subset_of(symmid.Ideal(3, [[1, 1]]))
    assert ideal.dimension() == {"p": 2, "dim": 1, "codim": 2}
    assert symmid.succ_ideal([1, 1, 1], 0, 3).generators == [[2, 1, 1]]
    y, yprime = symmid.y_family([3, 3], 0, 3)
    assert y.generators == [[1, 1, 1], [4]]
    assert yprime.generators == [[1, 1, 1]]
    assert symmid.truncate_to_n([[1, 1, 1]], 2).is_zero()


def test_zpair_helpers():
    ideal = example12()
    assert symmid.zpair_member([3, 3], 0, ideal)
    assert symmid.zpair_member_via_lattice([3, 3], 0, ideal)
    assert symmid.admits_socle_embedding([1, 1, 1], 0, ideal)
    singleton = symmid.z_set_singleton([2, 1], 2)
    assert len(singleton) == 2
    assert symmid.jzl_invariants([3, 3], 0, 3) == (6, 3)
    dec = symmid.ext_map_decomposition(ideal, ideal.saturate(1), 2)
    assert dec["ker"] == []


def test_z_set_and_invariants():
    pairs = symmid.z_set(example12())
    assert len(pairs) == 6
    assert {(tuple(p["z"]), p["l"]) for p in pairs} == {
        ((), 1),
        ((1, 1), 1),
        ((1, 1, 1), 0),
        ((2, 2), 0),
        ((3, 2), 0),
        ((3, 3), 0),
    }
    report = symmid.invariants(example12())
    assert (report["reg"], report["pdim"]) == (7, 2)


def test_oracle_agreement():
    assert symmid.oracle_invariants(example12()) == (7, 2)
    table = symmid.betti_table(example12())
    assert table["entries"][(0, 4)] == 3
    assert table["entries"][(2, 7)] == 3


def test_powers():
    support = symmid.powers_support([2, 1], 2, 4)
    assert [4, 1, 1] in support
    assert [3, 1, 1, 1] not in support
    assert symmid.reg_power_exact([2, 1], 3, 4) == 9
    assert symmid.b_const([2, 1], 4) == 0
    assert symmid.asymptotic_reg([3, 1], 2, 4) == 17
    feasible, assignment = symmid.bp_feasible(1, [2, 1], [2, 1], 0, 2)
    assert feasible
    assert sum(assignment[0]) == 1


def test_chain():
    profile = symmid.chain_profile([[2, 1, 1], [3, 3]])
    assert profile["C"] == 1
    assert profile["threshold"] == 5
    assert symmid.reg_chain([[2, 1, 1], [3, 3]], 4) == (6, "exact")
    assert symmid.reg_chain([[2, 1, 1], [3, 3]], 5, verify=True) == (6, "formula")


def test_cm_and_filtration():
    report = symmid.is_cohen_macaulay(example12())
    assert not report["cohen_macaulay"]
    chain = symmid.scm_filtration(example12())
    assert len(chain) == 3
    assert chain[-1].is_unit()


def test_errors():
    with pytest.raises(ValueError):
        symmid.invariants(symmid.Ideal(2, [[]]))
    with pytest.raises(ValueError):
        symmid.Ideal(2, [[1, 1, 1]])
