from itertools import permutations

import numpy as np
import pytest

from symtest.boolfunc import NotAdmissibleError, TruthTable, generate_functions
from symtest.circuits import (
    CNOT,
    Circuit,
    Gate,
    H,
    X,
    assert_equivalent,
    compile_equivalent,
    iter_basis_inputs,
    oracle_as_cnots,
    pipeline_as_circuit,
    simulate_circuit,
)
from symtest.pipeline import run
from symtest.statevec import BasisKet, ket_to_vector, parse_ket, vector_to_ket

tt = TruthTable.from_string


def test_oracle_as_cnots_examples():
    assert oracle_as_cnots(tt("0011")).gates == (CNOT(0, 2),)
    assert oracle_as_cnots(tt("0110")).gates == (CNOT(0, 2), CNOT(1, 2))
    assert oracle_as_cnots(tt("0000")).gates == ()
    assert oracle_as_cnots(tt("1100")).gates == (CNOT(0, 2), X(2))


def test_oracle_as_cnots_rejects_non_admissible():
    with pytest.raises(NotAdmissibleError):
        oracle_as_cnots(tt("0001"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_circuit_computes_xor_into_ancilla(n):
    pos, neg = generate_functions(n)
    for f in pos + neg:
        circ = oracle_as_cnots(f)
        for t in range(1 << n):
            for k in (0, 1):
                bits = tuple((t >> (n - 1 - i)) & 1 for i in range(n)) + (k,)
                out = vector_to_ket(simulate_circuit(circ, BasisKet(1, bits)))
                assert out.sign == 1
                assert out.bits == bits[:-1] + (k ^ f.bits[t],)


def test_compile_equivalent_examples():
    c = compile_equivalent(tt("0011"))
    assert c.gates == (X(0),)
    assert c.global_sign == 1
    c = compile_equivalent(tt("1001"))
    assert c.gates == (X(0), X(1))
    assert c.global_sign == -1
    c = compile_equivalent(tt("0000"))
    assert c.gates == ()
    assert c.global_sign == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_compile_equivalent_never_touches_ancilla(n):
    pos, neg = generate_functions(n)
    for f in pos + neg:
        for g in compile_equivalent(f).gates:
            assert n not in g.qubits


@pytest.mark.parametrize("table", ["0011", "0110"])
def test_pipeline_circuit_equals_compiled_on_ancilla_one(table):
    f = tt(table)
    assert assert_equivalent(
        pipeline_as_circuit(f),
        compile_equivalent(f),
        inputs=iter_basis_inputs(3, last_bit=1),
    )


@pytest.mark.parametrize("n", [1, 2, 3])
def test_equivalence_generalizes(n):
    pos, neg = generate_functions(n)
    for f in pos + neg:
        assert assert_equivalent(
            pipeline_as_circuit(f),
            compile_equivalent(f),
            inputs=iter_basis_inputs(n + 1, last_bit=1),
        )


def test_compiled_circuit_reproduces_run():
    for table in ("0011", "1001", "0110", "1111"):
        f = tt(table)
        circ = compile_equivalent(f)
        for ket in iter_basis_inputs(3, last_bit=1):
            got = vector_to_ket(simulate_circuit(circ, ket))
            assert got == run(f, ket).output


def test_simulate_circuit_examples():
    empty = Circuit(2)
    v = simulate_circuit(empty, parse_ket("+01"))
    assert np.array_equal(v.amplitudes, ket_to_vector(parse_ket("+01")).amplitudes)

    flip = Circuit(2, (X(0),))
    assert vector_to_ket(simulate_circuit(flip, parse_ket("+01"))) == parse_ket("+11")

    hh = Circuit(2, (H(0), H(0)))
    out = simulate_circuit(hh, parse_ket("+10"))
    assert np.allclose(out.amplitudes, ket_to_vector(parse_ket("+10")).amplitudes, atol=1e-12)


def test_simulate_circuit_global_sign():
    c = Circuit(1, (X(0),), global_sign=-1)
    assert vector_to_ket(simulate_circuit(c, parse_ket("+0"))) == parse_ket("-1")


def test_simulate_circuit_width_mismatch():
    with pytest.raises(ValueError):
        simulate_circuit(Circuit(2), parse_ket("+011"))


def test_cnot_works_in_both_directions():
    down = Circuit(2, (CNOT(0, 1),))
    assert vector_to_ket(simulate_circuit(down, parse_ket("+10"))) == parse_ket("+11")
    up = Circuit(2, (CNOT(1, 0),))
    assert vector_to_ket(simulate_circuit(up, parse_ket("+01"))) == parse_ket("+11")
    assert vector_to_ket(simulate_circuit(up, parse_ket("+10"))) == parse_ket("+10")


def test_assert_equivalent_self():
    c = pipeline_as_circuit(tt("0110"))
    assert assert_equivalent(c, c)


def test_assert_equivalent_detects_difference():
    a = Circuit(2, (X(0),))
    b = Circuit(2, (X(1),))
    assert not assert_equivalent(a, b)


def test_x_gates_commute():
    f = tt("1001")
    base = compile_equivalent(f)
    for order in permutations(base.gates):
        assert assert_equivalent(base, Circuit(base.wires, tuple(order), base.global_sign))


def test_assert_equivalent_validation():
    with pytest.raises(ValueError):
        assert_equivalent(Circuit(2), Circuit(3))
    with pytest.raises(ValueError):
        assert_equivalent(Circuit(13), Circuit(13))


def test_gate_validation():
    with pytest.raises(ValueError):
        CNOT(1, 1)
    with pytest.raises(ValueError):
        Gate("T", (0,))
    with pytest.raises(ValueError):
        Gate("H", (0, 1))
    with pytest.raises(ValueError):
        Circuit(2, (X(2),))
    with pytest.raises(ValueError):
        Circuit(2, (), global_sign=0)


def test_circuit_text_form():
    f = tt("1100")
    assert str(oracle_as_cnots(f)) == "wires=3 sign=+1\nCNOT 0 2\nX 2"
    assert str(compile_equivalent(f)) == "wires=3 sign=-1\nX 0"
