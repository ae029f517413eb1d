"""
Hessenberg functions, their box diagrams, and S-fixed points of regular
nilpotent Hessenberg varieties.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

from ..algebra.permgroup import Permutation, all_permutations, from_word

logger = logging.getLogger(__name__)

Box = Tuple[int, int]


class InvalidHessenbergError(ValueError):
    """Values do not form a Hessenberg function."""


class InvalidSubsetError(ValueError):
    """Subset is not contained in [n-1]."""


class BoxEditError(ValueError):
    """Adding or removing this box would break the Hessenberg conditions."""


def parse_int_list(text: str) -> List[int]:
    """"3,3,4,4" -> [3, 3, 4, 4]; empty text -> []."""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


@dataclass(frozen=True, order=True)
class HessenbergFunction:
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise InvalidHessenbergError("a Hessenberg function needs n >= 1 values")
        for i, value in enumerate(values, start=1):
            if value < i:
                raise InvalidHessenbergError(f"h({i}) = {value} violates h(i) >= i")
            if value > n:
                raise InvalidHessenbergError(f"h({i}) = {value} violates h(i) <= n = {n}")
        for i in range(1, n):
            if values[i] < values[i - 1]:
                raise InvalidHessenbergError(
                    f"h({i + 1}) = {values[i]} < h({i}) = {values[i - 1]} violates nondecreasing"
                )

    @classmethod
    def parse(cls, text: str) -> "HessenbergFunction":
        return cls(tuple(parse_int_list(text)))

    @classmethod
    def peterson(cls, n: int) -> "HessenbergFunction":
        return cls(tuple(min(i + 1, n) for i in range(1, n + 1)))

    @classmethod
    def flag(cls, n: int) -> "HessenbergFunction":
        return cls((n,) * n)

    @classmethod
    def point(cls, n: int) -> "HessenbergFunction":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def format(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.format()

    def is_indecomposable(self) -> bool:
        return all(self(i) >= i + 1 for i in range(1, self.n))

    def boxes(self) -> List[Box]:
        """Cells (i, j) of the diagram with i <= h(j)."""
        return [(i, j) for j in range(1, self.n + 1) for i in range(1, self(j) + 1)]

    def addable_boxes(self) -> List[Box]:
        out = []
        for j in range(1, self.n + 1):
            i = self(j) + 1
            if i <= self.n and (j == self.n or self(j + 1) >= i):
                out.append((i, j))
        return out

    def removable_boxes(self) -> List[Box]:
        out = []
        for j in range(1, self.n + 1):
            i = self(j)
            if (j == 1 or self(j - 1) < i) and i - 1 >= j:
                out.append((i, j))
        return out


def h_leq(h_prime: HessenbergFunction, h: HessenbergFunction) -> bool:
    if h_prime.n != h.n:
        raise InvalidHessenbergError(f"cannot compare functions on [{h_prime.n}] and [{h.n}]")
    return all(a <= b for a, b in zip(h_prime.values, h.values))


def add_box(h: HessenbergFunction, box: Box) -> HessenbergFunction:
    if box not in h.addable_boxes():
        raise BoxEditError(f"box {box} cannot be added to h = ({h}); addable: {h.addable_boxes()}")
    i, j = box
    values = list(h.values)
    values[j - 1] = i
    return HessenbergFunction(tuple(values))


def remove_box(h: HessenbergFunction, box: Box) -> HessenbergFunction:
    if box not in h.removable_boxes():
        raise BoxEditError(
            f"box {box} is not a removable corner of h = ({h}); corners: {h.removable_boxes()}"
        )
    i, j = box
    values = list(h.values)
    values[j - 1] = i - 1
    return HessenbergFunction(tuple(values))


def all_hessenberg_functions(n: int) -> List[HessenbergFunction]:
    """All Catalan(n) Hessenberg functions on [n], lexicographic."""
    out: List[HessenbergFunction] = []

    def extend(prefix: Tuple[int, ...]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(HessenbergFunction(prefix))
            return
        low = max(i, prefix[-1] if prefix else 1)
        high = n
        for value in range(low, high + 1):
            extend(prefix + (value,))

    extend(())
    return out


def _is_fixed(w: Permutation, h: HessenbergFunction) -> bool:
    inverse = w.inverse()
    for i in range(1, w.n + 1):
        value = w(i) - 1
        position = inverse(value) if value >= 1 else 0
        if position > h(i):
            return False
    return True


def fixed_points(h: HessenbergFunction) -> List[Permutation]:
    """{w : w^{-1}(w(i) - 1) <= h(i) for all i}, with w^{-1}(0) = 0; lex order."""
    return [w for w in all_permutations(h.n) if _is_fixed(w, h)]


def minimal_hessenberg(w: Permutation) -> HessenbergFunction:
    """The least h with w among its fixed points."""
    inverse = w.inverse()
    values = []
    running = 0
    for i in range(1, w.n + 1):
        value = w(i) - 1
        if value >= 1:
            running = max(running, inverse(value))
        values.append(max(i, running))
    return HessenbergFunction(tuple(values))


def is_minimal_for(w: Permutation, h: HessenbergFunction) -> bool:
    """w is fixed for h but for no function obtained by removing one corner."""
    if not _is_fixed(w, h):
        return False
    return not any(_is_fixed(w, remove_box(h, box)) for box in h.removable_boxes())


@dataclass(frozen=True)
class SubsetA:
    elements: FrozenSet[int]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", frozenset(int(x) for x in self.elements))
        bad = [x for x in self.elements if not 1 <= x <= self.n - 1]
        if bad:
            raise InvalidSubsetError(f"{sorted(bad)} not in [n-1] = [1..{self.n - 1}]")

    @classmethod
    def parse(cls, text: str, n: int) -> "SubsetA":
        return cls(frozenset(parse_int_list(text)), n)

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, i: object) -> bool:
        return i in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.sorted()) + "}"

    @cached_property
    def strings(self) -> Tuple[Tuple[int, int], ...]:
        """Maximal consecutive strings [a, b], increasing."""
        out: List[Tuple[int, int]] = []
        for x in self.sorted():
            if out and out[-1][1] == x - 1:
                out[-1] = (out[-1][0], x)
            else:
                out.append((x, x))
        return tuple(out)

    def string_of(self, i: int) -> Optional[Tuple[int, int]]:
        for a, b in self.strings:
            if a <= i <= b:
                return (a, b)
        return None

    def head(self, i: int) -> int:
        """H_A(i): largest element of the string containing i."""
        found = self.string_of(i)
        if found is None:
            raise InvalidSubsetError(f"{i} not in {self}")
        return found[1]

    def tail(self, i: int) -> int:
        """T_A(i): smallest element of the string containing i."""
        found = self.string_of(i)
        if found is None:
            raise InvalidSubsetError(f"{i} not in {self}")
        return found[0]

    def add(self, j: int) -> "SubsetA":
        return SubsetA(self.elements | {j}, self.n)


def all_subsets(n: int) -> List[SubsetA]:
    """Subsets of [n-1] by cardinality, then lexicographically."""
    return [
        SubsetA(frozenset(combo), n)
        for size in range(n)
        for combo in combinations(range(1, n), size)
    ]


def subset_to_vA(subset: SubsetA) -> Permutation:
    """Product of s_i over the subset in increasing order."""
    return from_word(subset.sorted(), subset.n)


def wA_reduced_word(subset: SubsetA) -> Tuple[int, ...]:
    """Fixed reduced word: for each string [a, b], blocks s_a...s_{b-s}, s = 0..b-a."""
    word: List[int] = []
    for a, b in subset.strings:
        for s in range(b - a + 1):
            word.extend(range(a, b - s + 1))
    return tuple(word)


def subset_to_wA(subset: SubsetA) -> Permutation:
    """Reverse positions a..b+1 for every maximal string [a, b]."""
    word = list(range(1, subset.n + 1))
    for a, b in subset.strings:
        word[a - 1 : b + 1] = reversed(word[a - 1 : b + 1])
    return Permutation(tuple(word))


def peterson_fixed_points(n: int) -> List[Tuple[SubsetA, Permutation]]:
    if n < 1:
        raise ValueError("n must be positive")
    return [(subset, subset_to_wA(subset)) for subset in all_subsets(n)]
