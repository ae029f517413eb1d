"""
Symmetric-group combinatorics on one-line notation.

Conventions: positions and values are 1-based, composition is
``compose(u, v)(i) = u(v(i))`` and a word ``(b_1, ..., b_k)`` stands for the
product ``s_{b_1} s_{b_2} ... s_{b_k}``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Sequence, Tuple

logger = logging.getLogger(__name__)

ReducedWord = Tuple[int, ...]


class InvalidPermutationError(ValueError):
    """Input is not a permutation of {1..n} or sizes disagree."""


class InvalidWordError(ValueError):
    """A word uses out-of-range letters or is not reduced where required."""


@dataclass(frozen=True, order=True)
class Permutation:
    word: Tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise InvalidPermutationError("a permutation needs n >= 1 entries")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutationError(
                f"{list(word)} is not a bijection of {{1..{len(word)}}}"
            )

    # -- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """"3214" (n <= 9) or "10,2,3,..."; whitespace ignored."""
        text = text.strip()
        if not text:
            raise InvalidPermutationError("empty permutation")
        try:
            if "," in text:
                values = [int(part) for part in text.split(",")]
            else:
                values = [int(ch) for ch in text]
        except ValueError:
            raise InvalidPermutationError(
                f"cannot read {text!r} as one-line notation"
            ) from None
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i <= n - 1:
            raise InvalidWordError(f"s_{i} does not exist in S_{n}")
        word = list(range(1, n + 1))
        word[i - 1], word[i] = word[i], word[i - 1]
        return cls(tuple(word))

    # -- basic data ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def format(self) -> str:
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def __str__(self) -> str:
        return self.format()

    @cached_property
    def _inverse_word(self) -> Tuple[int, ...]:
        inv = [0] * self.n
        for pos, value in enumerate(self.word, start=1):
            inv[value - 1] = pos
        return tuple(inv)

    def inverse(self) -> "Permutation":
        return Permutation(self._inverse_word)

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        w = self.word
        return sum(
            1 for a in range(self.n) for b in range(a + 1, self.n) if w[a] > w[b]
        )

    def is_identity(self) -> bool:
        return self.word == tuple(range(1, self.n + 1))

    def descents(self) -> List[int]:
        """Right descents: i with w(i) > w(i+1)."""
        return [i for i in range(1, self.n) if self.word[i - 1] > self.word[i]]

    def is_left_descent(self, i: int) -> bool:
        inv = self._inverse_word
        return inv[i - 1] > inv[i]

    def left_descents(self) -> List[int]:
        return [i for i in range(1, self.n) if self.is_left_descent(i)]

    # -- group operations ---------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def left_multiply_simple(self, i: int) -> "Permutation":
        """s_i * w: swap the values i and i+1."""
        word = [i + 1 if x == i else i if x == i + 1 else x for x in self.word]
        return Permutation(tuple(word))

    def right_multiply_simple(self, i: int) -> "Permutation":
        """w * s_i: swap the entries in positions i and i+1."""
        word = list(self.word)
        word[i - 1], word[i] = word[i], word[i - 1]
        return Permutation(tuple(word))


def compose(u: Permutation, v: Permutation) -> Permutation:
    if u.n != v.n:
        raise InvalidPermutationError(f"cannot compose S_{u.n} with S_{v.n}")
    return Permutation(tuple(u.word[x - 1] for x in v.word))


def all_permutations(n: int) -> List[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def from_word(word: Sequence[int], n: int) -> Permutation:
    result = Permutation.identity(n)
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise InvalidWordError(f"letter {letter} out of range for S_{n}")
        result = result.right_multiply_simple(letter)
    return result


def is_reduced(word: Sequence[int], n: int) -> bool:
    return from_word(word, n).length == len(word)


def reduced_word(w: Permutation) -> ReducedWord:
    """Lexicographically smallest reduced word (greedy left-descent stripping)."""
    letters: List[int] = []
    current = w
    while not current.is_identity():
        i = min(current.left_descents())
        letters.append(i)
        current = current.left_multiply_simple(i)
    return tuple(letters)


@lru_cache(maxsize=4096)
def reduced_words(w: Permutation) -> Tuple[ReducedWord, ...]:
    """All reduced words of w, lexicographically sorted."""
    if w.is_identity():
        return ((),)
    out: List[ReducedWord] = []
    for i in w.left_descents():
        for tail in reduced_words(w.left_multiply_simple(i)):
            out.append((i,) + tail)
    return tuple(sorted(out))


def _occurrences(v: Permutation, b: Sequence[int], first_only: bool) -> Iterator[Tuple[int, ...]]:
    # remainder r satisfies v = (chosen letters) * r; a letter may be taken
    # iff it is a left descent of r
    target = v.length
    limit = len(b)

    def walk(start: int, remainder: Permutation, chosen: Tuple[int, ...]):
        if len(chosen) == target:
            yield chosen
            return
        needed = target - len(chosen)
        for pos in range(start, limit - needed + 1):
            letter = b[pos]
            if remainder.is_left_descent(letter):
                yield from walk(pos + 1, remainder.left_multiply_simple(letter), chosen + (pos + 1,))

    gen = walk(0, v, ())
    if first_only:
        first = next(gen, None)
        if first is not None:
            yield first
    else:
        yield from gen


def reduced_subword_occurrences(v: Permutation, b: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Index tuples (1-based, strictly increasing) picking a reduced word of v
    out of the reduced word b.
    """
    b = tuple(b)
    if not is_reduced(b, v.n):
        raise InvalidWordError(f"{b} is not a reduced word in S_{v.n}")
    return list(_occurrences(v, b, first_only=False))


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Subword criterion against the canonical reduced word of w."""
    if v.n != w.n:
        raise InvalidPermutationError(f"cannot compare S_{v.n} with S_{w.n}")
    if v.length > w.length:
        return False
    return next(_occurrences(v, reduced_word(w), first_only=True), None) is not None


def bruhat_leq_tableau(v: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of v are dominated by those of w."""
    if v.n != w.n:
        raise InvalidPermutationError(f"cannot compare S_{v.n} with S_{w.n}")
    for k in range(1, v.n):
        left = sorted(v.word[:k])
        right = sorted(w.word[:k])
        if any(a > b for a, b in zip(left, right)):
            return False
    return True
