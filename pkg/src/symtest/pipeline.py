"""The Hadamard-oracle-Hadamard pipeline and its analytic predictor.

run() simulates H on all n+1 wires, then U_f, then H again, and reads
off the signed basis state.  predict() computes the same result without
simulation from the parity form: output bits are x XOR mask, the ancilla
stays 1, and the sign is the input sign times (-1)^complement.  The two
paths are independent, so their agreement is the library's main
correctness check (verify_all) and the basis of the coherence test:
the faultless pipeline reproduces the prediction with probability
exactly 1, and success_probability() measures the drop under an
injected fault.

Simulation arithmetic is exact for the unfaulted pipeline: Hadamard
layers are applied as unnormalized (a+b, a-b) butterflies on integer
amplitudes and the accumulated 2^(k/2) factors are divided out at the
end, which is a power of two whenever the butterfly count is even.
"""

import math
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from .bitops import int_to_bits, xor_bits
from .boolfunc import (
    ParityForm,
    TruthTable,
    from_parity_form,
    generate_functions,
    padded_hex,
    to_parity_form,
)
from .oracle import QuantumOracle
from .statevec import (
    MAX_QUBITS,
    BasisKet,
    NotBasisStateError,
    StateVector,
    butterfly,
    vector_to_ket,
)

Layer = Literal["first", "second"]


@dataclass(frozen=True)
class SkipHadamard:
    """Omit the Hadamard on one qubit in one layer."""

    layer: Layer
    qubit: int


@dataclass(frozen=True)
class RotateQubit:
    """Extra real rotation by `angle` on one qubit, right after one layer."""

    layer: Layer
    qubit: int
    angle: float


@dataclass(frozen=True)
class CorruptOracleEntry:
    """Flip one truth-table entry before building the oracle."""

    index: int


Fault = Union[SkipHadamard, RotateQubit, CorruptOracleEntry]


@dataclass(frozen=True)
class PipelineResult:
    output: BasisKet
    ancilla_ok: bool


def _check_input(f: TruthTable, input: BasisKet) -> None:
    if input.k != f.n + 1:
        raise ValueError(f"input must have {f.n + 1} bits, got {input.k}")
    if input.bits[-1] != 1:
        raise ValueError("pipeline input must end in the ancilla bit 1")


def _check_fault(fault: Fault | None, n: int) -> None:
    if fault is None:
        return
    if isinstance(fault, (SkipHadamard, RotateQubit)):
        if fault.layer not in ("first", "second"):
            raise ValueError(f"fault layer must be 'first' or 'second', got {fault.layer!r}")
        if not 0 <= fault.qubit < n + 1:
            raise ValueError(f"fault qubit {fault.qubit} out of range for {n + 1} wires")
    elif isinstance(fault, CorruptOracleEntry):
        if not 0 <= fault.index < 1 << n:
            raise ValueError(f"oracle entry {fault.index} out of range for n={n}")
    else:
        raise ValueError(f"unknown fault spec: {fault!r}")


def _rotate(arr: np.ndarray, qubit: int, angle: float) -> None:
    shaped = arr.reshape(1 << qubit, 2, -1)
    a = shaped[:, 0, :].copy()
    b = shaped[:, 1, :].copy()
    c, s = math.cos(angle), math.sin(angle)
    shaped[:, 0, :] = c * a - s * b
    shaped[:, 1, :] = s * a + c * b


def _simulate_raw(
    f: TruthTable, input: BasisKet, fault: Fault | None = None, max_qubits: int = MAX_QUBITS
) -> np.ndarray:
    k = f.n + 1
    if k > max_qubits:
        raise ValueError(f"pipeline on {k} qubits exceeds the cap of {max_qubits}")
    _check_input(f, input)
    _check_fault(fault, f.n)

    table = f
    if isinstance(fault, CorruptOracleEntry):
        bits = list(f.bits)
        bits[fault.index] ^= 1
        table = TruthTable(f.n, tuple(bits))

    arr = np.zeros(1 << k)
    arr[input.index] = float(input.sign)
    stages = 0
    for layer in ("first", "second"):
        for q in range(k):
            if isinstance(fault, SkipHadamard) and fault.layer == layer and fault.qubit == q:
                continue
            butterfly(arr, q)
            stages += 1
        if isinstance(fault, RotateQubit) and fault.layer == layer:
            _rotate(arr, fault.qubit, fault.angle)
        if layer == "first":
            arr = arr[QuantumOracle(table).permutation]

    arr *= 2.0 ** -(stages // 2)
    if stages % 2:
        arr /= math.sqrt(2.0)
    return arr


def run_vector(f: TruthTable, input: BasisKet, max_qubits: int = MAX_QUBITS) -> StateVector:
    """Final state vector of the faultless pipeline, in exact arithmetic."""
    return StateVector(_simulate_raw(f, input, max_qubits=max_qubits))


def run(
    f: TruthTable, input: BasisKet, tolerance: float = 1e-9, max_qubits: int = MAX_QUBITS
) -> PipelineResult:
    """Simulate the pipeline and read off the signed basis state.

    Raises NotBasisStateError when the final vector is still a
    superposition, which happens exactly when f is not admissible.
    """
    vec = _simulate_raw(f, input, max_qubits=max_qubits)
    try:
        ket = vector_to_ket(StateVector(vec), tolerance)
    except NotBasisStateError:
        raise NotBasisStateError(
            f"pipeline output for f={f} is not a basis state (function not admissible)"
        ) from None
    return PipelineResult(ket, ket.bits[-1] == 1)


def predict(f: TruthTable, input: BasisKet) -> PipelineResult:
    """Analytic output without simulation; raises NotAdmissibleError otherwise."""
    pf = to_parity_form(f)
    _check_input(f, input)
    y = xor_bits(input.bits[:-1], pf.mask)
    sign = input.sign * (-1 if pf.complement else 1)
    return PipelineResult(BasisKet(sign, y + (1,)), True)


def solve_function(input: BasisKet, desired: BasisKet) -> TruthTable:
    """The unique admissible function mapping one signed basis state to another."""
    if input.k != desired.k:
        raise ValueError(f"state widths differ: {input.k} vs {desired.k}")
    if input.bits[-1] != 1 or desired.bits[-1] != 1:
        raise ValueError("both states must end in the ancilla bit 1")
    mask = xor_bits(input.bits[:-1], desired.bits[:-1])
    complement = 0 if input.sign == desired.sign else 1
    return from_parity_form(ParityForm(input.k - 1, mask, complement))


def success_probability(
    f: TruthTable,
    input: BasisKet,
    fault: Fault | None = None,
    max_qubits: int = MAX_QUBITS,
) -> float:
    """Squared overlap of the (possibly faulted) pipeline output with predict().

    Exactly 1.0 when no fault is injected; anything less flags a loss of
    coherence or a broken gate.
    """
    target = predict(f, input).output
    vec = _simulate_raw(f, input, fault, max_qubits=max_qubits)
    overlap = float(vec[target.index]) * target.sign
    return overlap * overlap


@dataclass
class VerifyReport:
    """Outcome of the exhaustive run-vs-predict sweep for one n."""

    n: int
    total: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.total}/{self.total}"
        return f"FAIL {len(self.failures)}/{self.total}"

    def render(self) -> str:
        return "\n".join(self.failures + [self.summary()])


def verify_all(n: int, max_n: int = 6) -> VerifyReport:
    """Check run == predict for every admissible f and every signed basis input."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")
    positives, negatives = generate_functions(n)
    report = VerifyReport(n, 0)
    for f in positives + negatives:
        for idx in range(1 << n):
            for sign in (1, -1):
                ket = BasisKet(sign, int_to_bits(idx, n) + (1,))
                want = predict(f, ket)
                report.total += 1
                try:
                    got = run(f, ket)
                except NotBasisStateError:
                    report.failures.append(
                        f"f={padded_hex(f)} x={ket} got=NotBasisState want={want.output}"
                    )
                    continue
                if got != want:
                    report.failures.append(
                        f"f={padded_hex(f)} x={ket} got={got.output} want={want.output}"
                    )
    return report
