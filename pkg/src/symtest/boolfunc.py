"""Boolean functions with recursive symmetry and their affine parity form.

A function on n variables is stored as its truth table: 2^n output bits
ordered by input value, x1 being the most significant input bit (inputs
count 00, 01, 10, 11, ...).  The functions of interest here are the
"admissible" ones: tables that are symmetric (equal to their reversal) or
antisymmetric (equal to the complement of their reversal) at every
recursive halving level.  These are exactly the affine parity functions
f(x) = c XOR parity(x AND m), and there are 2^(n+1) of them: 2^n
"positive" (leading bit 0) and 2^n "negative" (leading bit 1).
"""

from dataclasses import dataclass
from enum import Enum

from .bitops import bits_to_int, format_bits, int_to_bits, parity, parse_bits, xor_bits

MAX_N = 20

_FLIP = str.maketrans("01", "10")


class NotAdmissibleError(ValueError):
    """The truth table is not an affine parity function."""


class FunctionClass(Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NOT_ADMISSIBLE = "NotAdmissible"


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function on n variables as an ordered 2^n bit sequence."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {self.n}")
        if len(self.bits) != 1 << self.n:
            raise ValueError(
                f"truth table for n={self.n} needs {1 << self.n} bits, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("truth table bits must be 0 or 1")

    @classmethod
    def from_bits(cls, bits) -> "TruthTable":
        bits = tuple(bits)
        n = max(len(bits), 2).bit_length() - 1
        return cls(n, bits)

    @classmethod
    def from_value(cls, n: int, value: int) -> "TruthTable":
        return cls(n, int_to_bits(value, 1 << n))

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        return cls.from_bits(parse_bits(text))

    @property
    def value(self) -> int:
        return bits_to_int(self.bits)

    def complement(self) -> "TruthTable":
        return TruthTable(self.n, tuple(1 - b for b in self.bits))

    def __str__(self) -> str:
        return format_bits(self.bits)


@dataclass(frozen=True)
class ParityForm:
    """Canonical form of an admissible function: f(x) = c XOR parity(x AND m)."""

    n: int
    mask: tuple[int, ...]
    complement: int

    def __post_init__(self):
        if len(self.mask) != self.n:
            raise ValueError(f"mask must have {self.n} bits, got {len(self.mask)}")
        if any(b not in (0, 1) for b in self.mask) or self.complement not in (0, 1):
            raise ValueError("mask bits and complement must be 0 or 1")

    @property
    def mask_value(self) -> int:
        return bits_to_int(self.mask)

    def expression(self) -> str:
        """Human-readable XOR-of-variables form, e.g. '1^x2^x3'."""
        terms = [f"x{i + 1}" for i, b in enumerate(self.mask) if b]
        if self.complement:
            terms.insert(0, "1")
        return "^".join(terms) if terms else "0"


def generate_functions(n: int, max_n: int = MAX_N) -> tuple[list[TruthTable], list[TruthTable]]:
    """Build all positive and negative admissible functions on n variables.

    Level 1 is (00), (01) positive and (11), (10) negative.  Each further
    level orders the previous level's tables and concatenates each with
    itself and with its mirror image (its complement, the table at the
    mirrored list position).  Positives come out in construction order,
    which is ascending; negatives are reported in ascending numerical
    order for n >= 2.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")
    positives = [(0, 0), (0, 1)]
    negatives = [(1, 1), (1, 0)]
    for _ in range(n - 1):
        level = sorted(positives + negatives)
        pos: list[tuple[int, ...]] = []
        neg: list[tuple[int, ...]] = []
        for g in level:
            mirror = tuple(1 - b for b in g)
            for table in (g + g, g + mirror):
                (pos if table[0] == 0 else neg).append(table)
        positives, negatives = pos, sorted(neg)
    return (
        [TruthTable(n, bits) for bits in positives],
        [TruthTable(n, bits) for bits in negatives],
    )


def is_admissible(tt: TruthTable) -> bool:
    """True iff the table is symmetric or antisymmetric at every halving level."""
    return _admissible(str(tt))


def _admissible(s: str) -> bool:
    if len(s) == 2:
        return True
    r = s[::-1]
    if r != s and r.translate(_FLIP) != s:
        return False
    half = len(s) // 2
    return _admissible(s[:half]) and _admissible(s[half:])


def to_parity_form(tt: TruthTable) -> ParityForm:
    """Extract (mask, complement) with mask bit i = f(e_i) XOR f(0).

    The candidate form is verified against every table entry; a table
    that is not an affine parity function raises NotAdmissibleError.
    """
    c = tt.bits[0]
    mask = tuple(tt.bits[1 << (tt.n - 1 - i)] ^ c for i in range(tt.n))
    m = bits_to_int(mask)
    for i, bit in enumerate(tt.bits):
        if bit != c ^ parity(i & m):
            raise NotAdmissibleError(f"{tt} is not an affine parity function")
    return ParityForm(tt.n, mask, c)


def from_parity_form(pf: ParityForm) -> TruthTable:
    m = pf.mask_value
    bits = tuple(pf.complement ^ parity(i & m) for i in range(1 << pf.n))
    return TruthTable(pf.n, bits)


def classify(tt: TruthTable) -> FunctionClass:
    if not is_admissible(tt):
        return FunctionClass.NOT_ADMISSIBLE
    return FunctionClass.NEGATIVE if tt.bits[0] else FunctionClass.POSITIVE


def hex_encode(tt: TruthTable) -> str:
    """Uppercase hex of the table value, most significant bit first, unpadded."""
    return format(tt.value, "X")


def padded_hex(tt: TruthTable) -> str:
    """Hex zero-padded to the table's full width (one digit per 4 bits)."""
    return format(tt.value, f"0{hex_width(tt.n)}X")


def hex_width(n: int) -> int:
    return max(1, (1 << n) // 4)


def hex_decode(text: str, n: int, max_n: int = MAX_N) -> TruthTable:
    """Parse a truth table from a binary or hex string.

    Accepts a bare binary string of exactly 2^n bits, or hex with a "$"
    or "0x" prefix, or bare hex.  A bare all-0/1 string whose length is
    not 2^n is read as hex.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")
    size = 1 << n
    s = text.strip()
    if s.startswith("$"):
        body = s[1:]
    elif s[:2].lower() == "0x":
        body = s[2:]
    else:
        if s and all(c in "01" for c in s) and len(s) == size:
            return TruthTable(n, parse_bits(s))
        body = s
    try:
        value = int(body, 16)
    except ValueError:
        raise ValueError(f"malformed function string: {text!r}") from None
    if value >> size:
        raise ValueError(f"{text!r} does not fit a {size}-bit truth table")
    return TruthTable.from_value(n, value)


def delta_between(x, y) -> tuple[int, ...]:
    """The shift D with y = x XOR D, computed bitwise."""
    return xor_bits(x, y)


def is_invariant_under(tt: TruthTable, delta) -> bool:
    """True iff f(x) = f(x XOR delta) for every input x."""
    if len(delta) != tt.n:
        raise ValueError(f"delta must have {tt.n} bits, got {len(delta)}")
    d = bits_to_int(tuple(delta))
    return all(tt.bits[i] == tt.bits[i ^ d] for i in range(1 << tt.n))


def function_line(tt: TruthTable) -> str:
    """One-line listing form: "<binary> <hex> <decimal> <class>"."""
    return f"{tt} {padded_hex(tt)} {tt.value} {classify(tt).value}"
