"""Pauli operators in binary-symplectic form and graph-state stabilizers.

An n-qubit Pauli is i^q * X^r * Z^s with bit vectors r, s packed into
integers (bit i-1 is qubit/vertex i, matching :mod:`gsv.graph`) and a
phase exponent q mod 4.  The stabilizer group of a graph state consists
of the 2^n elements (-1)^{sum_{i<j} r_i g_ij r_j} X^r Z^{Gr}, one per
index vector r.

Rendered strings put vertex 1 leftmost and use the letters 1, X, Y, Z;
a leading "-" marks a negative sign.  The i absorbed by each Y factor
(Y = iXZ) is tracked in q, and only overall phases of +1 or -1 can be
rendered: these stabilizers are Hermitian, so +-i never occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, HardCapExceeded
from .graph import Graph

ENUMERATION_CAP = 28

_LETTERS = {(0, 0): "1", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_LETTER_BITS = {"1": (0, 0), "I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


def bits_to_mask(bits: Iterable[int] | int, n: int) -> int:
    """Accept an int bitmask or a length-n 0/1 sequence; return the mask."""
    if isinstance(bits, int) and not isinstance(bits, bool):
        if not 0 <= bits < (1 << n):
            raise DomainError(f"bit mask {bits:#x} does not fit {n} qubits")
        return bits
    seq = list(bits)
    if len(seq) != n:
        raise DomainError(f"expected a length-{n} bit vector, got length {len(seq)}")
    mask = 0
    for i, b in enumerate(seq):
        if b not in (0, 1):
            raise DomainError(f"bit vector entries must be 0 or 1, got {b!r}")
        mask |= b << i
    return mask


def mask_to_bits(mask: int, n: int) -> tuple[int, ...]:
    return tuple(mask >> i & 1 for i in range(n))


def symplectic_weight(r, s, n: int | None = None) -> int:
    """Size of the union of the supports of r and s."""
    if isinstance(r, int) and isinstance(s, int) and n is None:
        return (r | s).bit_count()
    if n is None:
        r_seq, s_seq = list(r), list(s)
        if len(r_seq) != len(s_seq):
            raise DomainError(
                f"bit vectors differ in length: {len(r_seq)} vs {len(s_seq)}"
            )
        n = len(r_seq)
        r, s = r_seq, s_seq
    return (bits_to_mask(r, n) | bits_to_mask(s, n)).bit_count()


def adjacency_times(g: Graph, r: int) -> int:
    """The GF(2) product of the adjacency matrix with index vector r."""
    s = 0
    rest = r
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        s ^= g.rows[i]
    return s


def quadratic_form(g: Graph, r: int) -> int:
    """sum_{i<j} r_i g_ij r_j mod 2 (the stabilizer sign exponent)."""
    total = 0
    rest = r
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        total += (g.rows[i] & r).bit_count()
    # each unordered pair was counted twice (symmetric, zero diagonal)
    return (total >> 1) & 1


@dataclass(frozen=True)
class PauliOperator:
    """i^q X^r Z^s on n qubits; r and s are bit masks."""

    n: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if not 1 <= self.n:
            raise DomainError(f"qubit count must be positive, got {self.n}")
        object.__setattr__(self, "q", self.q % 4)
        for name in ("r", "s"):
            mask = getattr(self, name)
            if not 0 <= mask < (1 << self.n):
                raise DomainError(f"{name} mask {mask:#x} does not fit {self.n} qubits")

    @property
    def weight(self) -> int:
        return (self.r | self.s).bit_count()

    def phase_exponent(self) -> int:
        """Power of i in front of the rendered letter string."""
        return (self.q - (self.r & self.s).bit_count()) % 4

    @property
    def sign(self) -> int:
        """+1 or -1; raises for non-Hermitian (imaginary) overall phases."""
        exp = self.phase_exponent()
        if exp % 2:
            raise DomainError("operator carries an imaginary overall phase (+-i)")
        return 1 if exp == 0 else -1

    def letters(self) -> str:
        return "".join(
            _LETTERS[(self.r >> i & 1, self.s >> i & 1)] for i in range(self.n)
        )

    def render(self) -> str:
        sign = self.sign
        return ("-" if sign < 0 else "") + self.letters()

    def to_json(self) -> dict:
        return {"sign": self.sign, "paulis": self.letters()}

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        """Matrix product; commuting Z^s past X^r costs (-1)^(s.r)."""
        if not isinstance(other, PauliOperator):
            return NotImplemented
        if self.n != other.n:
            raise DomainError(f"operand sizes differ: {self.n} vs {other.n}")
        swap_sign = (self.s & other.r).bit_count() & 1
        return PauliOperator(
            n=self.n,
            q=(self.q + other.q + 2 * swap_sign) % 4,
            r=self.r ^ other.r,
            s=self.s ^ other.s,
        )

    @classmethod
    def from_string(cls, text: str) -> "PauliOperator":
        body = text.strip()
        sign = 1
        if body[:1] in ("+", "-"):
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if not body:
            raise DomainError(f"empty Pauli string {text!r}")
        r = s = 0
        for i, letter in enumerate(body.upper()):
            try:
                rb, sb = _LETTER_BITS[letter]
            except KeyError:
                raise DomainError(f"invalid Pauli letter {letter!r} in {text!r}") from None
            r |= rb << i
            s |= sb << i
        n_y = (r & s).bit_count()
        q = (n_y + (2 if sign < 0 else 0)) % 4
        return cls(n=len(body), q=q, r=r, s=s)


def render_pauli(p: PauliOperator) -> str:
    return p.render()


@dataclass(frozen=True)
class StabilizerElement:
    """Stabilizer group member indexed by r: (-1)^sigma X^r Z^{Gr}."""

    r: int
    pauli: PauliOperator

    @property
    def weight(self) -> int:
        return self.pauli.weight

    @property
    def sign(self) -> int:
        return self.pauli.sign

    def render(self) -> str:
        return self.pauli.render()

    def to_json(self) -> dict:
        return self.pauli.to_json()


def stabilizer_for(g: Graph, r) -> StabilizerElement:
    """The stabilizer element indexed by bit vector r."""
    mask = bits_to_mask(r, g.n)
    s = adjacency_times(g, mask)
    sigma = quadratic_form(g, mask)
    return StabilizerElement(r=mask, pauli=PauliOperator(n=g.n, q=2 * sigma, r=mask, s=s))


def enumerate_stabilizers(g: Graph) -> Iterator[StabilizerElement]:
    """All 2^n stabilizer elements in ascending integer order of r."""
    if g.n > ENUMERATION_CAP:
        raise HardCapExceeded(
            f"enumerating 2^{g.n} stabilizers exceeds the cap of n <= {ENUMERATION_CAP}",
            size=g.n,
            limit=ENUMERATION_CAP,
        )
    return (stabilizer_for(g, r) for r in range(1 << g.n))


@dataclass(frozen=True)
class MembershipResult:
    r: int
    sign_matches: bool


def membership(g: Graph, p: PauliOperator) -> MembershipResult | None:
    """Locate p in the stabilizer group of g, up to sign.

    Returns the index vector r and whether the sign matches exactly, or
    None when the Z part is not the adjacency image of the X part.  An
    operator carrying an imaginary overall phase (+-i) can never match
    a stabilizer sign exactly, so it reports sign_matches=False.
    """
    if p.n != g.n:
        raise DomainError(f"operator acts on {p.n} qubits, graph has {g.n}")
    if adjacency_times(g, p.r) != p.s:
        return None
    element = stabilizer_for(g, p.r)
    exp = p.phase_exponent()
    matches = exp % 2 == 0 and element.sign == (1 if exp == 0 else -1)
    return MembershipResult(r=p.r, sign_matches=matches)
