"""Exact arithmetic in Thompson's group F.

The group is presented by generators x_0, x_1, x_2, ... subject to
x_i^-1 x_k x_i = x_{k+1} for all k > i.  Every element has a unique normal
form  x_{i_1} ... x_{i_r} . x_{j_t}^-1 ... x_{j_1}^-1  with nondecreasing
index sequences (i_1 <= ... <= i_r and j_1 <= ... <= j_t) such that whenever
an index occurs on both sides, index+1 occurs on at least one side.

`NormalForm` is the canonical, immutable value type used everywhere else in
the package: equality, hashing, lengths and subgroup membership are all
defined on it.  Raw words (sequences of signed atoms) exist only as inputs
to `normalize`.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ._kernels import mul_arrays

_I64 = np.int64
_EMPTY = np.empty(0, dtype=_I64)
_EMPTY.setflags(write=False)

_KEY_SENTINEL = b"\xff"


class Atom(NamedTuple):
    """One signed generator occurrence: x_index (sign=+1) or x_index^-1."""

    index: int
    sign: int

    def inverse(self) -> "Atom":
        return Atom(self.index, -self.sign)


Word = tuple  # a word is a tuple of Atoms; no invariants beyond atom validity


def _as_index_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=_I64)
    if arr.ndim != 1:
        raise ValueError("index sequence must be one-dimensional")
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


class NormalForm:
    """Canonical representative of an element of F.

    `pos` and `neg` are read-only int64 arrays, each sorted nondecreasing,
    holding the indices of the positive and negative halves of the normal
    form.  Instances are immutable; all operations return new values.
    """

    __slots__ = ("pos", "neg", "_key", "_hash")

    def __init__(self, pos=(), neg=()):
        pos = _as_index_array(pos)
        neg = _as_index_array(neg)
        if pos.size and (pos[0] < 0 or np.any(np.diff(pos) < 0)):
            raise ValueError("pos must be nondecreasing and nonnegative")
        if neg.size and (neg[0] < 0 or np.any(np.diff(neg) < 0)):
            raise ValueError("neg must be nondecreasing and nonnegative")
        if not _satisfies_pairing(pos, neg):
            raise ValueError("index pair violates the normal-form condition")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("NormalForm is immutable")

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return (
            self.pos.size == other.pos.size
            and self.neg.size == other.neg.size
            and bool(np.all(self.pos == other.pos))
            and bool(np.all(self.neg == other.neg))
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.canonical_key())
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"NormalForm(pos={self.pos.tolist()}, neg={self.neg.tolist()})"

    # -- basic observers ----------------------------------------------------

    @property
    def length(self) -> int:
        """Normal-form length: total number of atoms, |pos| + |neg|."""
        return int(self.pos.size + self.neg.size)

    def is_identity(self) -> bool:
        return self.pos.size == 0 and self.neg.size == 0

    def canonical_key(self) -> bytes:
        """Injective byte encoding: count-prefixed big-endian indices.

        Layout: len(pos) . pos entries . 0xff . len(neg) . neg entries,
        every integer as a 4-byte big-endian word.  Equal keys iff equal
        elements; the lexicographic order on keys is the deterministic
        tie-breaking order used by the attacks.
        """
        k = self._key
        if k is None:
            k = (
                int(self.pos.size).to_bytes(4, "big")
                + self.pos.astype(">u4").tobytes()
                + _KEY_SENTINEL
                + int(self.neg.size).to_bytes(4, "big")
                + self.neg.astype(">u4").tobytes()
            )
            object.__setattr__(self, "_key", k)
        return k

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)

    def inverse(self) -> "NormalForm":
        return _nf(self.neg, self.pos)

    def atoms(self) -> tuple:
        """Expand back into the word spelled by the normal form."""
        out = [Atom(int(i), 1) for i in self.pos]
        out.extend(Atom(int(j), -1) for j in self.neg[::-1])
        return tuple(out)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {"pos": [int(v) for v in self.pos], "neg": [int(v) for v in self.neg]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "NormalForm":
        return cls(obj["pos"], obj["neg"])

    @classmethod
    def from_json(cls, text: str) -> "NormalForm":
        return cls.from_dict(json.loads(text))


def _nf(pos: np.ndarray, neg: np.ndarray) -> NormalForm:
    """Internal constructor for arrays already known to be normal."""
    obj = object.__new__(NormalForm)
    if not pos.flags.writeable:
        pass
    else:
        pos.setflags(write=False)
    if neg.flags.writeable:
        neg.setflags(write=False)
    object.__setattr__(obj, "pos", pos)
    object.__setattr__(obj, "neg", neg)
    object.__setattr__(obj, "_key", None)
    object.__setattr__(obj, "_hash", None)
    return obj


IDENTITY = _nf(_EMPTY, _EMPTY)


def _satisfies_pairing(pos: np.ndarray, neg: np.ndarray) -> bool:
    """Check the normal-form condition: a shared index needs index+1 nearby."""
    if pos.size == 0 or neg.size == 0:
        return True
    ps = set(pos.tolist())
    ns = set(neg.tolist())
    for i in ps & ns:
        if i + 1 not in ps and i + 1 not in ns:
            return False
    return True


def is_normal(pos: Sequence[int], neg: Sequence[int]) -> bool:
    """True iff the two sequences form a valid normal form (used by tests)."""
    pos = np.asarray(pos, dtype=_I64)
    neg = np.asarray(neg, dtype=_I64)
    for arr in (pos, neg):
        if arr.size and (arr[0] < 0 or np.any(np.diff(arr) < 0)):
            return False
    return _satisfies_pairing(pos, neg)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    """Product of two elements, as a normal form."""
    pos, neg = mul_arrays(a.pos, a.neg, b.pos, b.neg)
    return _nf(pos, neg)


def invert(a: NormalForm) -> NormalForm:
    """Inverse: formally swaps the positive and negative halves."""
    return _nf(a.neg, a.pos)


def conjugate(a: NormalForm, g: NormalForm) -> NormalForm:
    """g^-1 * a * g (the inner automorphism defined by g, applied to a)."""
    return multiply(multiply(invert(g), a), g)


def nf_length(a: NormalForm) -> int:
    return a.length


def equals(a: NormalForm, b: NormalForm) -> bool:
    return a == b


def canonical_key(a: NormalForm) -> bytes:
    return a.canonical_key()


def atom_nf(index: int, sign: int) -> NormalForm:
    """Normal form of a single signed generator."""
    if index < 0:
        raise ValueError("generator index must be nonnegative")
    arr = np.asarray([index], dtype=_I64)
    if sign > 0:
        return _nf(arr, _EMPTY)
    return _nf(_EMPTY, arr)


def normalize(word: Iterable[Atom]) -> NormalForm:
    """Unique normal form of an arbitrary word.

    Divide and conquer over the atom sequence; with the linear-time merge
    kernels the total work is O(n log n) in the word length.
    """
    atoms = list(word)
    if not atoms:
        return IDENTITY
    return _normalize_range(atoms, 0, len(atoms))


def _normalize_range(atoms, lo, hi) -> NormalForm:
    if hi - lo == 1:
        index, sign = atoms[lo]
        return atom_nf(index, sign)
    mid = (lo + hi) // 2
    return multiply(_normalize_range(atoms, lo, mid), _normalize_range(atoms, mid, hi))


# ---------------------------------------------------------------------------
# subgroup membership
# ---------------------------------------------------------------------------

def is_in_A(a: NormalForm, s: int) -> bool:
    """Membership in the subgroup generated by {x_0 x_1^-1, ..., x_0 x_s^-1}.

    Characterization: both halves have equal length m and, counting from 1,
    pos[k] - k < s and neg[k] - k < s for every k <= m.
    """
    if s < 2:
        raise ValueError("subgroup parameter s must be >= 2")
    m = a.pos.size
    if a.neg.size != m:
        return False
    if m == 0:
        return True
    ranks = np.arange(1, m + 1, dtype=_I64)
    return bool(np.all(a.pos - ranks < s) and np.all(a.neg - ranks < s))


def is_in_B(a: NormalForm, s: int) -> bool:
    """Membership in the subgroup generated by {x_{s+1}, ..., x_{2s}}:
    no generator with index <= s may appear."""
    if s < 2:
        raise ValueError("subgroup parameter s must be >= 2")
    if a.pos.size and int(a.pos[0]) <= s:
        return False
    if a.neg.size and int(a.neg[0]) <= s:
        return False
    return True


# ---------------------------------------------------------------------------
# word (de)serialization:  "x0 x1^-1"  <->  (Atom(0, 1), Atom(1, -1))
# ---------------------------------------------------------------------------

_ATOM_RE = re.compile(r"^x(\d+)(\^-1)?$")


def word_to_text(word: Iterable[Atom]) -> str:
    parts = []
    for index, sign in word:
        parts.append(f"x{index}" if sign > 0 else f"x{index}^-1")
    return " ".join(parts)


def text_to_word(text: str) -> tuple:
    atoms = []
    for token in text.split():
        m = _ATOM_RE.match(token)
        if not m:
            raise ValueError(f"malformed atom {token!r}")
        atoms.append(Atom(int(m.group(1)), -1 if m.group(2) else 1))
    return tuple(atoms)
