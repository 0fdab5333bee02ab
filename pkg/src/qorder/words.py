"""Digit alphabets, words, questions and the Next comparison of words.

A word is a tuple of digit indices.  The digit at rank r lives in the small
order ``seq.item(r)``; two words are compared at their first difference
(the question), and words without a question (one is a prefix of the
other) are incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import AlphabetError, DuplicateWordError, LengthError, ValidationError
from .order import EQ, INC, FiniteOrder, Rel, invert

Word = tuple  # tuple[int, ...]

TOTAL2 = FiniteOrder.chain(2)
ANTI2 = FiniteOrder.antichain(2)


def word(text: str) -> Word:
    """Parse a compact digit string such as "0110"."""
    return tuple(int(c) for c in text)


def fmt_word(w: Sequence[int]) -> str:
    if all(0 <= d < 10 for d in w):
        return "".join(map(str, w))
    return ".".join(map(str, w))


@dataclass(frozen=True)
class OrderSequence:
    """Per-rank digit alphabets.

    ``items[r]`` governs rank r; ranks past the listed items use ``tail``
    (None means the sequence ends there).
    """

    items: tuple = ()
    tail: Optional[FiniteOrder] = None

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        for it in self.items + ((self.tail,) if self.tail is not None else ()):
            if it.n < 1:
                raise AlphabetError("alphabet items need at least one digit")

    @classmethod
    def uniform(cls, item: FiniteOrder) -> "OrderSequence":
        return cls((), item)

    def item(self, r: int) -> FiniteOrder:
        if r < len(self.items):
            return self.items[r]
        if self.tail is None:
            raise AlphabetError(f"rank {r} is beyond the alphabet length {len(self.items)}")
        return self.tail

    @property
    def length(self) -> Optional[int]:
        """Number of ranks, or None when the tail repeats forever."""
        return None if self.tail is not None else len(self.items)

    def width(self, upto: Optional[int] = None) -> int:
        """Largest alphabet size among ranks < upto (all listed ranks by default)."""
        if upto is None:
            its = list(self.items) + ([self.tail] if self.tail is not None else [])
        else:
            its = [self.item(r) for r in range(upto)]
        return max((it.n for it in its), default=0)

    def materialize(self, length: int) -> "OrderSequence":
        """Same alphabet with at least ``length`` explicit items."""
        items = list(self.items)
        while len(items) < length:
            items.append(self.item(len(items)))
        return OrderSequence(tuple(items), self.tail)

    def inverted(self) -> "OrderSequence":
        return OrderSequence(tuple(invert(it) for it in self.items),
                             None if self.tail is None else invert(self.tail))


@dataclass(frozen=True)
class Question:
    rank: int
    left: int
    right: int


def _check_digits(w: Sequence[int], seq: OrderSequence):
    for r, d in enumerate(w):
        it = seq.item(r)
        if not 0 <= d < it.n:
            raise AlphabetError(f"digit {d} out of range at rank {r} (alphabet size {it.n})")


def question(x: Sequence[int], y: Sequence[int], seq: OrderSequence) -> Optional[Question]:
    """First rank where x and y differ, or None when one is a prefix of the other."""
    _check_digits(x, seq)
    _check_digits(y, seq)
    for r in range(min(len(x), len(y))):
        if x[r] != y[r]:
            return Question(r, x[r], y[r])
    return None


def next_compare(x: Sequence[int], y: Sequence[int], seq: OrderSequence) -> Rel:
    q = question(x, y, seq)
    if q is None:
        return EQ if tuple(x) == tuple(y) else INC
    return seq.item(q.rank).rel(q.left, q.right)


@dataclass(frozen=True)
class QuestionableRepresentation:
    alphabet: OrderSequence
    words: tuple
    min_length: int = 1

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))

    @property
    def n(self) -> int:
        return len(self.words)

    @property
    def length(self) -> int:
        """Longest word."""
        return max((len(w) for w in self.words), default=0)

    @property
    def width(self) -> int:
        """Largest alphabet used by the ranks that carry digits."""
        return self.alphabet.width(self.length)

    def compare(self, i: int, j: int) -> Rel:
        return next_compare(self.words[i], self.words[j], self.alphabet)

    def is_strict(self) -> bool:
        n = self.n
        return all(question(self.words[i], self.words[j], self.alphabet) is not None
                   for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    pair: Optional[tuple] = None
    expected: Optional[Rel] = None
    got: Optional[Rel] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return f"fail: pair {self.pair}: {self.reason}"


def validate_qrep(host: FiniteOrder, q: QuestionableRepresentation,
                  strict: bool = False) -> ValidationReport:
    if q.n != host.n:
        raise ValidationError(f"representation has {q.n} words for {host.n} elements")
    seen = {}
    for i, w in enumerate(q.words):
        if w in seen:
            raise DuplicateWordError(f"elements {seen[w]} and {i} share word {fmt_word(w)!r}")
        seen[w] = i
        if len(w) < q.min_length:
            raise LengthError(f"word of element {i} shorter than {q.min_length}")
        _check_digits(w, q.alphabet)
    for i in range(host.n):
        for j in range(i + 1, host.n):
            qu = question(q.words[i], q.words[j], q.alphabet)
            got = INC if qu is None else q.alphabet.item(qu.rank).rel(qu.left, qu.right)
            want = host.rel(i, j)
            if got != want:
                return ValidationReport(False, (i, j), want, got,
                                        f"words give {got.name}, order has {want.name}")
            if strict and qu is None:
                return ValidationReport(False, (i, j), want, got, "no question (prefix pair)")
    return ValidationReport(True)
