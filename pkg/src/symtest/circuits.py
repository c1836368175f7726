"""Gate-list circuits: CNOT oracles and their Hadamard-free equivalents.

A circuit is an ordered list of H/X/CNOT gates on a fixed number of
wires plus a global +-1 sign.  The sign is tracked on the circuit rather
than as a gate so that negative functions ("multiplied by -1") keep
hardware-realistic gate lists.

Equivalences are always established numerically, by simulating both
circuits on basis inputs, never by rewrite identities.  Note that the
Hadamard-sandwiched CNOT oracle agrees with its X-gate equivalent only
on inputs whose function wire is |1>; on |0> ancilla inputs the sandwich
is the identity.  assert_equivalent therefore takes an explicit input
set, and the pipeline checks pass the ancilla-1 basis states.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product

import numpy as np

from .boolfunc import TruthTable, to_parity_form
from .statevec import BasisKet, StateVector, butterfly

MAX_EQUIV_QUBITS = 12

_GATE_ARITY = {"H": 1, "X": 1, "CNOT": 2}


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.name not in _GATE_ARITY:
            raise ValueError(f"unknown gate {self.name!r}")
        if len(self.qubits) != _GATE_ARITY[self.name]:
            raise ValueError(f"{self.name} takes {_GATE_ARITY[self.name]} qubit(s)")
        if self.name == "CNOT" and self.qubits[0] == self.qubits[1]:
            raise ValueError("CNOT control and target must differ")

    def __str__(self) -> str:
        return " ".join([self.name] + [str(q) for q in self.qubits])


def H(qubit: int) -> Gate:
    return Gate("H", (qubit,))


def X(qubit: int) -> Gate:
    return Gate("X", (qubit,))


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


@dataclass(frozen=True)
class Circuit:
    wires: int
    gates: tuple[Gate, ...] = ()
    global_sign: int = 1

    def __post_init__(self):
        if self.wires < 1:
            raise ValueError("a circuit needs at least one wire")
        if self.global_sign not in (1, -1):
            raise ValueError(f"global sign must be +1 or -1, got {self.global_sign}")
        for g in self.gates:
            if any(q < 0 or q >= self.wires for q in g.qubits):
                raise ValueError(f"gate {g} out of range for {self.wires} wires")

    def __str__(self) -> str:
        sign = "+1" if self.global_sign > 0 else "-1"
        lines = [f"wires={self.wires} sign={sign}"]
        lines += [str(g) for g in self.gates]
        return "\n".join(lines)


def oracle_as_cnots(f: TruthTable) -> Circuit:
    """CNOT realization of U_f: one CNOT per mask bit into the ancilla,
    plus an X on the ancilla for complemented functions."""
    pf = to_parity_form(f)
    gates = [CNOT(i, f.n) for i, b in enumerate(pf.mask) if b]
    if pf.complement:
        gates.append(X(f.n))
    return Circuit(f.n + 1, tuple(gates))


def compile_equivalent(f: TruthTable) -> Circuit:
    """Hadamard-free equivalent of the full pipeline on ancilla-1 inputs:
    X on each mask qubit, nothing on the ancilla, sign (-1)^complement."""
    pf = to_parity_form(f)
    gates = tuple(X(i) for i, b in enumerate(pf.mask) if b)
    return Circuit(f.n + 1, gates, -1 if pf.complement else 1)


def pipeline_as_circuit(f: TruthTable) -> Circuit:
    """The full wiring: H on every wire, the CNOT oracle, H on every wire."""
    k = f.n + 1
    layer = tuple(H(q) for q in range(k))
    return Circuit(k, layer + oracle_as_cnots(f).gates + layer)


def simulate_circuit(circ: Circuit, input: BasisKet) -> StateVector:
    """Apply the gates left to right to the input ket's vector."""
    if input.k != circ.wires:
        raise ValueError(f"input has {input.k} bits, circuit has {circ.wires} wires")
    k = circ.wires
    arr = np.zeros(1 << k)
    arr[input.index] = float(input.sign)
    idx = np.arange(1 << k)
    for g in circ.gates:
        if g.name == "H":
            butterfly(arr, g.qubits[0])
            arr /= np.sqrt(2.0)
        elif g.name == "X":
            arr = arr[idx ^ (1 << (k - 1 - g.qubits[0]))]
        else:
            cmask = 1 << (k - 1 - g.qubits[0])
            tmask = 1 << (k - 1 - g.qubits[1])
            arr = arr[np.where(idx & cmask, idx ^ tmask, idx)]
    if circ.global_sign < 0:
        arr = -arr
    return StateVector(arr)


def iter_basis_inputs(wires: int, last_bit: int | None = None) -> Iterator[BasisKet]:
    """All positive computational basis kets, optionally with the last wire fixed."""
    free = wires if last_bit is None else wires - 1
    for bits in product((0, 1), repeat=free):
        if last_bit is not None:
            bits = bits + (last_bit,)
        yield BasisKet(1, bits)


def assert_equivalent(
    a: Circuit,
    b: Circuit,
    tol: float = 1e-9,
    inputs: Iterable[BasisKet] | None = None,
    max_qubits: int = MAX_EQUIV_QUBITS,
) -> bool:
    """True iff both circuits produce the same vector on every given basis
    input (all of them by default)."""
    if a.wires != b.wires:
        raise ValueError(f"wire counts differ: {a.wires} vs {b.wires}")
    if a.wires > max_qubits:
        raise ValueError(f"equivalence check on {a.wires} wires exceeds the cap of {max_qubits}")
    if inputs is None:
        inputs = iter_basis_inputs(a.wires)
    for ket in inputs:
        va = simulate_circuit(a, ket)
        vb = simulate_circuit(b, ket)
        if not np.allclose(va.amplitudes, vb.amplitudes, rtol=0, atol=tol):
            return False
    return True
