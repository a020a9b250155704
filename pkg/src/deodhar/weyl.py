"""Weyl groups of types A_n and B_n as permutation windows.

A type B element is a signed permutation, stored as the window
``(w(1), ..., w(n))`` with ``w(i)`` in ``{+-1, ..., +-n}``; a type A element
is a plain permutation of ``{1, ..., n+1}``.  The generators match the root
realization of :mod:`deodhar.roots`:

* type B: ``t_1`` flips the sign of coordinate 1, ``t_i`` (i >= 2) swaps
  coordinates ``i-1`` and ``i``;
* type A: ``t_i`` swaps coordinates ``i`` and ``i+1``.

>>> ctx = context("B", 3)
>>> ctx.from_word([1]).window
(-1, 2, 3)
>>> ctx.from_word([3, 2, 1, 2, 3, 2, 1, 2, 1]) == ctx.longest_element()
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .roots import FAMILY_A, FAMILY_B, Root, root_system


class CoxeterContext:
    """One Weyl group W(A_n) or W(B_n); use :func:`context` to obtain one."""

    def __init__(self, family: str, rank: int):
        root_system(family, rank)  # validates family and rank, runs self-test
        self.family = family
        self.rank = rank
        self.window_size = rank + 1 if family == FAMILY_A else rank
        self._bruhat_cache: dict[tuple, bool] = {}
        self._reduced_word_cache: dict[tuple, tuple] = {}

    def __repr__(self) -> str:
        return f"CoxeterContext({self.family}_{self.rank})"

    @property
    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(1, self.window_size + 1)))

    def generator(self, i: int) -> "WeylElement":
        return self.identity.right_mult_generator(i)

    def generators(self) -> list["WeylElement"]:
        return [self.generator(i) for i in range(1, self.rank + 1)]

    def from_word(self, letters: Iterable[int]) -> "WeylElement":
        w = self.identity
        for i in letters:
            w = w.right_mult_generator(i)
        return w

    def from_window(self, window: Sequence[int]) -> "WeylElement":
        return WeylElement(self, tuple(int(v) for v in window))

    def longest_element(self) -> "WeylElement":
        if self.family == FAMILY_B:
            return WeylElement(self, tuple(-i for i in range(1, self.rank + 1)))
        return WeylElement(self, tuple(range(self.window_size, 0, -1)))

    def elements(self) -> Iterator["WeylElement"]:
        """All group elements, by length then window (breadth-first)."""
        layer = {self.identity}
        seen = set(layer)
        while layer:
            for w in sorted(layer, key=lambda x: x.window):
                yield w
            nxt = set()
            for w in layer:
                for i in range(1, self.rank + 1):
                    u = w.right_mult_generator(i)
                    if u not in seen and u.length == w.length + 1:
                        nxt.add(u)
                        seen.add(u)
            layer = nxt

    def parse_element(self, text: str) -> "WeylElement":
        """Parse window notation like ``-1,2,3``; ``e`` is the identity."""
        if text == "e":
            return self.identity
        return self.from_window(tuple(int(p) for p in text.split(",")))


_CONTEXTS: dict[tuple[str, int], CoxeterContext] = {}


def context(family: str, rank: int) -> CoxeterContext:
    key = (family, rank)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = CoxeterContext(family, rank)
    return _CONTEXTS[key]


@dataclass(frozen=True)
class WeylElement:
    """A group element in window notation; immutable and hashable."""

    ctx: CoxeterContext = field(compare=False, repr=False)
    window: tuple[int, ...] = ()

    def __post_init__(self):
        n = self.ctx.window_size
        if sorted(abs(v) for v in self.window) != list(range(1, n + 1)):
            raise ValueError(f"window {self.window} is not a (signed) permutation")
        if self.ctx.family == FAMILY_A and any(v < 0 for v in self.window):
            raise ValueError("type A windows are unsigned")

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.ctx is other.ctx and self.window == other.window

    def __hash__(self) -> int:
        return hash((self.ctx.family, self.ctx.rank, self.window))

    def apply(self, value: int) -> int:
        """Image of the signed index ``value`` in ``{+-1, ..., +-n}``."""
        image = self.window[abs(value) - 1]
        return image if value > 0 else -image

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.ctx is not other.ctx:
            raise ValueError("elements from different contexts")
        return WeylElement(self.ctx, tuple(self.apply(v) for v in other.window))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return WeylElement(self.ctx, tuple(inv))

    def right_mult_generator(self, i: int) -> "WeylElement":
        """Fast ``self * t_i``; the workhorse of every enumeration."""
        if not 1 <= i <= self.ctx.rank:
            raise ValueError(f"generator index {i} out of range")
        w = self.window
        if self.ctx.family == FAMILY_B:
            if i == 1:
                return WeylElement(self.ctx, (-w[0],) + w[1:])
            a, b = i - 2, i - 1
        else:
            a, b = i - 1, i
        new = list(w)
        new[a], new[b] = new[b], new[a]
        return WeylElement(self.ctx, tuple(new))

    @cached_property
    def length(self) -> int:
        """Number of positive roots made negative (= minimal word length)."""
        w = self.window
        n = len(w)
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
        )
        if self.ctx.family == FAMILY_A:
            return inversions
        negatives = sum(1 for v in w if v < 0)
        negative_pairs = sum(
            1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0
        )
        return inversions + negatives + negative_pairs

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, len(self.window) + 1))

    def has_right_descent(self, i: int) -> bool:
        """True iff length(self * t_i) < length(self)."""
        if not 1 <= i <= self.ctx.rank:
            raise ValueError(f"generator index {i} out of range")
        w = self.window
        if self.ctx.family == FAMILY_B:
            if i == 1:
                return w[0] < 0
            return w[i - 1] < w[i - 2]
        return w[i] < w[i - 1]

    def right_descents(self) -> list[int]:
        return [i for i in range(1, self.ctx.rank + 1) if self.has_right_descent(i)]

    def act_on_root(self, root: Root) -> Root:
        """Image of a root under the linear action on ambient coordinates."""
        system = root_system(self.ctx.family, self.ctx.rank)
        if (root.family, root.rank) != (self.ctx.family, self.ctx.rank):
            raise ValueError("root does not belong to this context")
        ambient = system.to_ambient(root.coeffs)
        moved = [0] * len(ambient)
        for k, v in enumerate(ambient, start=1):
            if v:
                image = self.apply(k)
                moved[abs(image) - 1] += v if image > 0 else -v
        return system.root(system.from_ambient(moved))

    def serialize(self) -> str:
        return ",".join(str(v) for v in self.window)

    def __str__(self) -> str:
        return self.serialize()


@dataclass(frozen=True)
class ReducedWord:
    """A reduced expression; reducedness is checked at construction."""

    ctx: CoxeterContext = field(compare=False, repr=False)
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        product = self.ctx.from_word(self.letters)
        if product.length != len(self.letters):
            raise ValueError(f"word {self.letters} is not reduced")
        object.__setattr__(self, "_product", product)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return self.ctx is other.ctx and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.ctx.family, self.ctx.rank, self.letters))

    @property
    def product(self) -> WeylElement:
        return self._product

    def __len__(self) -> int:
        return len(self.letters)

    def simple_root(self, position: int) -> Root:
        """Simple root of the letter at 1-based ``position``."""
        system = root_system(self.ctx.family, self.ctx.rank)
        return system.simple(self.letters[position - 1])

    def serialize(self) -> str:
        return ",".join(str(i) for i in self.letters)

    def __str__(self) -> str:
        return self.serialize()


def parse_word(ctx: CoxeterContext, text: str) -> ReducedWord:
    letters = tuple(int(p) for p in text.split(",")) if text else ()
    return ReducedWord(ctx, letters)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order, by the lifting property with memoization.

    For a right descent ``i`` of ``v``: if ``i`` is also a descent of ``u``
    then ``u <= v`` iff ``u t_i <= v t_i``, otherwise iff ``u <= v t_i``.
    """
    if u.ctx is not v.ctx:
        raise ValueError("elements from different contexts")
    cache = u.ctx._bruhat_cache
    stack = []
    while True:
        key = (u.window, v.window)
        if key in cache:
            result = cache[key]
            break
        if u == v or u.is_identity():
            result = True
            break
        if u.length >= v.length:
            result = False
            break
        stack.append(key)
        i = next(j for j in range(1, v.ctx.rank + 1) if v.has_right_descent(j))
        v = v.right_mult_generator(i)
        if u.has_right_descent(i):
            u = u.right_mult_generator(i)
    for key in stack:
        cache[key] = result
    return result


def all_reduced_words(w: WeylElement, max_length: int = 12) -> list[ReducedWord]:
    """Every reduced word for ``w``, in lexicographic order."""
    if w.length > max_length:
        raise ValueError(f"length {w.length} exceeds the bound {max_length}")
    cache = w.ctx._reduced_word_cache

    def rec(u: WeylElement) -> tuple[tuple[int, ...], ...]:
        if u.is_identity():
            return ((),)
        if u.window in cache:
            return cache[u.window]
        words = []
        for i in u.right_descents():
            for prefix in rec(u.right_mult_generator(i)):
                words.append(prefix + (i,))
        result = tuple(sorted(words))
        cache[u.window] = result
        return result

    return [ReducedWord(w.ctx, letters) for letters in rec(w)]
