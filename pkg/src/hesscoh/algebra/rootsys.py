"""
Finite root systems and their Weyl groups.

Simple roots are numbered as in the usual Bourbaki-style Dynkin figures
(E types branch at node 2 attached to node 4). ``matrix[i][j]`` holds the
Cartan integer a_ij = <alpha_i, alpha_j^vee>, so that
``s_j(alpha_i) = alpha_i - a_ij alpha_j`` and ``alpha_i = sum_j a_ij varpi_j``.

Weyl elements are integer matrices acting on column vectors of coordinates in
the fundamental-weight basis.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import SETTINGS

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]

TYPE_ORDER = "ABCDEFG"


class CartanTypeError(ValueError):
    """Unknown Cartan type or rank outside the supported range."""


class EnumerationBudgetError(ValueError):
    """The Weyl group is larger than the configured enumeration budget."""


def _validate(letter: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }
    if letter not in ok:
        raise CartanTypeError(f"unknown Cartan type {letter!r}; expected one of {TYPE_ORDER}")
    if not ok[letter]:
        raise CartanTypeError(f"type {letter} does not exist in rank {rank}")


def weyl_order(letter: str, rank: int) -> int:
    _validate(letter, rank)
    if letter == "A":
        return factorial(rank + 1)
    if letter in "BC":
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[
        (letter, rank)
    ]


@dataclass(frozen=True)
class CartanDatum:
    letter: str
    rank: int
    matrix: Matrix

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"

    def a(self, i: int, j: int) -> int:
        """Cartan integer a_ij, 1-based."""
        return self.matrix[i - 1][j - 1]

    def neighbors(self, i: int) -> List[int]:
        return [j for j in range(1, self.rank + 1) if j != i and self.a(i, j) != 0]

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.rank + 1)
            for j in range(i + 1, self.rank + 1)
            if self.a(i, j) != 0
        ]

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @property
    def order(self) -> int:
        return weyl_order(self.letter, self.rank)

    @classmethod
    def parse(cls, text: str) -> "CartanDatum":
        """"A3", "b2", "G2" ..."""
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise CartanTypeError(f"cannot read Cartan type from {text!r}; expected e.g. 'B3'")
        return build_cartan(text[0], int(text[1:]))


def build_cartan(letter: str, rank: int) -> CartanDatum:
    letter = letter.upper()
    _validate(letter, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def bond(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i - 1][j - 1] = a_ij
        a[j - 1][i - 1] = a_ji

    if letter in "ABC":
        for i in range(1, rank):
            bond(i, i + 1)
        if letter == "B":
            bond(rank - 1, rank, -2, -1)
        elif letter == "C":
            bond(rank - 1, rank, -1, -2)
    elif letter == "D":
        for i in range(1, rank - 1):
            bond(i, i + 1)
        bond(rank - 2, rank)
    elif letter == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, rank):
            bond(i, i + 1)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -2, -1)
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, -1, -3)
    return CartanDatum(letter, rank, tuple(tuple(row) for row in a))


@dataclass(frozen=True)
class WeylElement:
    """Compared and hashed by matrix; ``word`` is the canonical reduced word."""

    matrix: Matrix
    word: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def format(self) -> str:
        return "e" if not self.word else "s" + ".s".join(str(i) for i in self.word)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class ComponentType:
    """A connected piece of a subdiagram and how its nodes embed."""

    letter: str
    rank: int
    # embedding[k] is the ambient index playing the role of node k+1
    embedding: Tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"


def _to_tuple(array: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in array)


class WeylGroup:
    """Matrix model of W acting on weight coordinates, plus root actions."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        cartan = datum.as_array()
        self._cartan = cartan
        self._weight_simple: List[np.ndarray] = []
        self._root_simple: List[np.ndarray] = []
        for j in range(self.rank):
            # s_j on weights: c_l -> c_l - c_j a_jl
            sw = np.eye(self.rank, dtype=np.int64)
            sw[:, j] -= cartan[j, :]
            self._weight_simple.append(sw)
            # s_j on roots: r_j -> r_j - sum_i a_ij r_i
            sr = np.eye(self.rank, dtype=np.int64)
            sr[j, :] -= cartan[:, j]
            self._root_simple.append(sr)
        self._rho = np.ones(self.rank, dtype=np.int64)
        self._words: Dict[Matrix, Tuple[int, ...]] = {}

    # -- elements -----------------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise CartanTypeError(f"simple reflection s_{i} not in {self.datum.label}")

    def _left_descents_of(self, array: np.ndarray) -> List[int]:
        weights = array @ self._rho
        return [i + 1 for i, c in enumerate(weights) if c < 0]

    def _canonical_word(self, array: np.ndarray) -> Tuple[int, ...]:
        key = _to_tuple(array)
        cached = self._words.get(key)
        if cached is not None:
            return cached
        letters: List[int] = []
        current = array
        while True:
            descents = self._left_descents_of(current)
            if not descents:
                break
            i = descents[0]
            letters.append(i)
            current = self._weight_simple[i - 1] @ current
        word = tuple(letters)
        self._words[key] = word
        return word

    def element(self, array: np.ndarray) -> WeylElement:
        return WeylElement(_to_tuple(array), self._canonical_word(array))

    @property
    def identity(self) -> WeylElement:
        return WeylElement(_to_tuple(np.eye(self.rank, dtype=np.int64)), ())

    def simple(self, i: int) -> WeylElement:
        self._check_index(i)
        return WeylElement(_to_tuple(self._weight_simple[i - 1]), (i,))

    def from_word(self, word: Sequence[int]) -> WeylElement:
        array = np.eye(self.rank, dtype=np.int64)
        for i in word:
            self._check_index(i)
            array = array @ self._weight_simple[i - 1]
        return self.element(array)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self.element(u.as_array() @ v.as_array())

    def left_multiply_simple(self, i: int, w: WeylElement) -> WeylElement:
        return self.element(self._weight_simple[i - 1] @ w.as_array())

    def left_descents(self, w: WeylElement) -> List[int]:
        """i with l(s_i w) < l(w): the negative entries of w(rho)."""
        return self._left_descents_of(w.as_array())

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.from_word(word).length == len(word)

    # -- roots --------------------------------------------------------------

    def root_action(self, word: Sequence[int]) -> np.ndarray:
        """Matrix of s_{b_1}...s_{b_k} on simple-root coordinates."""
        array = np.eye(self.rank, dtype=np.int64)
        for i in word:
            array = array @ self._root_simple[i - 1]
        return array

    def word_roots(self, word: Sequence[int]) -> List[Tuple[int, ...]]:
        """r(i, b) = s_{b_1}...s_{b_{i-1}}(alpha_{b_i}) for every position i."""
        roots: List[Tuple[int, ...]] = []
        prefix = np.eye(self.rank, dtype=np.int64)
        for letter in word:
            self._check_index(letter)
            roots.append(tuple(int(x) for x in prefix[:, letter - 1]))
            prefix = prefix @ self._root_simple[letter - 1]
        return roots

    def apply_to_root(self, w: WeylElement, root: Sequence[int]) -> Tuple[int, ...]:
        image = self.root_action(w.word) @ np.array(root, dtype=np.int64)
        return tuple(int(x) for x in image)

    # -- words --------------------------------------------------------------

    def subword_occurrences(self, v: WeylElement, word: Sequence[int]) -> List[Tuple[int, ...]]:
        """1-based positions in ``word`` spelling a reduced word of v."""
        target = v.length
        limit = len(word)
        out: List[Tuple[int, ...]] = []

        def walk(start: int, remainder: np.ndarray, chosen: Tuple[int, ...]) -> None:
            if len(chosen) == target:
                out.append(chosen)
                return
            needed = target - len(chosen)
            descents = set(self._left_descents_of(remainder))
            for pos in range(start, limit - needed + 1):
                letter = word[pos]
                if letter in descents:
                    walk(pos + 1, self._weight_simple[letter - 1] @ remainder, chosen + (pos + 1,))

        walk(0, v.as_array(), ())
        return out

    def reduced_word_count(self, w: WeylElement) -> int:
        """|Red(w)| by dynamic programming over left descents."""

        @lru_cache(maxsize=None)
        def count(key: Matrix) -> int:
            array = np.array(key, dtype=np.int64)
            descents = self._left_descents_of(array)
            if not descents:
                return 1
            return sum(count(_to_tuple(self._weight_simple[i - 1] @ array)) for i in descents)

        return count(w.matrix)

    def reduced_words(self, w: WeylElement) -> List[Tuple[int, ...]]:
        array = w.as_array()
        descents = self._left_descents_of(array)
        if not descents:
            return [()]
        out: List[Tuple[int, ...]] = []
        for i in descents:
            rest = self.element(self._weight_simple[i - 1] @ array)
            out.extend((i,) + tail for tail in self.reduced_words(rest))
        return sorted(out)

    # -- parabolic data -----------------------------------------------------

    def longest_parabolic(self, subset: Iterable[int]) -> WeylElement:
        """w_K by greedy ascent inside W_K; no enumeration of W."""
        subset = sorted(set(subset))
        for i in subset:
            self._check_index(i)
        array = np.eye(self.rank, dtype=np.int64)
        while True:
            weights = array @ self._rho
            ascent = next((i for i in subset if weights[i - 1] > 0), None)
            if ascent is None:
                break
            array = self._weight_simple[ascent - 1] @ array
        return self.element(array)

    def enumerate(self, budget: Optional[int] = None) -> List[Tuple[WeylElement, int]]:
        budget = SETTINGS.weyl_budget if budget is None else budget
        order = self.datum.order
        if order > budget:
            raise EnumerationBudgetError(
                f"|W({self.datum.label})| = {order} exceeds the enumeration budget {budget}"
            )
        logger.info("Enumerating W(%s), %d elements", self.datum.label, order)
        start = self.identity
        seen: Dict[Matrix, WeylElement] = {start.matrix: start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            array = current.as_array()
            for s in self._weight_simple:
                key = _to_tuple(s @ array)
                if key not in seen:
                    element = self.element(np.array(key, dtype=np.int64))
                    seen[key] = element
                    queue.append(element)
        elements = sorted(seen.values(), key=lambda e: (e.length, e.word))
        return [(e, e.length) for e in elements]


_GROUPS: Dict[CartanDatum, WeylGroup] = {}


def weyl_group(datum: CartanDatum) -> WeylGroup:
    """Shared WeylGroup per datum so canonical-word caches are reused."""
    group = _GROUPS.get(datum)
    if group is None:
        group = _GROUPS.setdefault(datum, WeylGroup(datum))
    return group


def weyl_enumerate(datum: CartanDatum, budget: Optional[int] = None) -> List[Tuple[WeylElement, int]]:
    return weyl_group(datum).enumerate(budget)


def longest_parabolic(datum: CartanDatum, subset: Iterable[int]) -> WeylElement:
    return weyl_group(datum).longest_parabolic(subset)


def connected_components(datum: CartanDatum, subset: Iterable[int]) -> List[Tuple[int, ...]]:
    """Maximal Dynkin-connected pieces of ``subset``, ordered by least node."""
    remaining = set(subset)
    for i in remaining:
        if not 1 <= i <= datum.rank:
            raise CartanTypeError(f"node {i} not in {datum.label}")
    components: List[Tuple[int, ...]] = []
    for start in sorted(remaining):
        if any(start in comp for comp in components):
            continue
        piece = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for nb in datum.neighbors(node):
                if nb in remaining and nb not in piece:
                    piece.add(nb)
                    frontier.append(nb)
        components.append(tuple(sorted(piece)))
    return components


def _embeddings(datum: CartanDatum, component: Sequence[int], model: CartanDatum) -> Iterator[Tuple[int, ...]]:
    nodes = sorted(component)
    size = model.rank

    def extend(chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        k = len(chosen)
        if k == size:
            yield chosen
            return
        for node in nodes:
            if node in chosen:
                continue
            if all(
                datum.a(node, chosen[m]) == model.a(k + 1, m + 1)
                and datum.a(chosen[m], node) == model.a(m + 1, k + 1)
                for m in range(k)
            ):
                yield from extend(chosen + (node,))

    yield from extend(())


def identify_component(
    datum: CartanDatum, component: Sequence[int], largest: bool = False
) -> ComponentType:
    """
    Type of a connected subdiagram with the lex-smallest embedding (or the
    lex-largest when ``largest``); letters are tried in the order A..G.
    """
    size = len(component)
    for letter in TYPE_ORDER:
        try:
            model = build_cartan(letter, size)
        except CartanTypeError:
            continue
        found = list(_embeddings(datum, component, model))
        if found:
            embedding = found[-1] if largest else found[0]
            return ComponentType(letter, size, embedding)
    raise CartanTypeError(f"subdiagram {tuple(component)} of {datum.label} is not of finite type")


def all_subsets(rank: int) -> List[FrozenSet[int]]:
    """Subsets of [rank] ordered by cardinality, then lexicographically."""
    return [
        frozenset(combo)
        for size in range(rank + 1)
        for combo in combinations(range(1, rank + 1), size)
    ]
