from fractions import Fraction
from itertools import combinations

import pytest

import a2twist


def distinct_odd(m, n):
    return sum(1 for c in combinations(range(1, n + 1, 2), m) if sum(c) == n)


def test_oracle_examples():
    assert a2twist.partition_oracle(2, 8) == 2
    assert a2twist.partition_oracle(0, 0) == 1
    assert a2twist.partition_oracle(3, 9) == 1


def test_graded_dimension_matches_partitions():
    table = a2twist.graded_dimension(12)
    for (k, l), d in table.items():
        assert d == distinct_odd(k, l)
    assert table[(2, 4)] == 1


def test_dims_document():
    doc = a2twist.dims(8)
    assert doc["match"] is True
    row = next(b for b in doc["buckets"] if b["charge"] == 2 and b["qweight"] == 4)
    assert (row["dim"], row["oracle"]) == (1, 1)


def test_verify_recursion_and_bad_suite():
    doc = a2twist.verify(suites=["recursion"], cutoff=16)
    assert [s["name"] for s in doc["suites"]] == ["recursion"]
    assert doc["suites"][0]["pass"] is True
    with pytest.raises(ValueError):
        a2twist.verify(suites=["nonsense"], cutoff=8)


def test_lattice_values():
    half = Fraction(1, 2)
    assert a2twist.commutator_C((1, 0), (0, 1)) == (-1, 0)
    assert a2twist.cocycle_epsC((1, 0), (0, 1)) == (-1, 0)
    assert a2twist.sigma((1, 0)) == (1, -1)
    assert a2twist.u_bracket(-1, -3) == (half, 0)


def test_envelope_operations():
    word = a2twist.normal_order([("u", -1), ("u", -3)])
    assert word == {((), (-3, -1)): (1, 0), ((-4,), ()): (Fraction(1, 2), 0)}
    assert a2twist.psi([]) == {((), (-1,)): (1, 0)}
    assert a2twist.tau_shift([("z", -8), ("u", -5)]) == {((-4,), (-3,)): (0, -1)}
    assert a2twist.relation_generator("R12", 8) == {((-4, -4), ()): (1, 0)}
    assert a2twist.pbw_count(2, 4) - a2twist.ideal_rank(2, 4) == 1
    with pytest.raises(ValueError):
        a2twist.normal_order([("x", -1)])
