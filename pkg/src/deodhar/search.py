"""Counterexample machinery on top of the cell combinatorics.

The closure order ``preceq`` only bounds cell closures from above, and the
catalog below stores the known reduced words and masks in type B that defeat
the two optimistic expectations one might have:

* ``closure-obstruction`` (any rank n >= 3): a 4n-4 letter word with two
  distinguished masks, one of cell dimension 2n and one of dimension 3n-3,
  related by the closure order.  For n >= 4 the deeper cell cannot lie in
  the closure of the shallower one, so the partition is not a stratification.
* ``disjointness`` (rank 3): two distinguished masks of the longest word
  with equal endpoint t_2 and dimension 6, comparable in the closure order,
  whose cells nevertheless have disjoint closures.  The certificate is a
  negative simple root missing from one coordinate sequence and forced
  nonzero in the other.
* ``disjointness-extended`` (rank n >= 4): the same pair transported to
  rank n by prefixing a mask of ``t_n ... t_2 t_1 t_2 ... t_n`` that
  multiplies to the identity; the cells then have dimension 2n+2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import (
    CellDescriptor,
    Subexpression,
    cell,
    cells_with_endpoint,
    enumerate_subexpressions,
    is_distinguished,
    preceq,
    root_sequence,
    subexpression,
)
from .roots import Root
from .weyl import ReducedWord, WeylElement, context

CLOSURE_OBSTRUCTION = "closure-obstruction"
DISJOINTNESS = "disjointness"
DISJOINTNESS_EXTENDED = "disjointness-extended"

SCAN_BOUND = 20


@dataclass(frozen=True)
class CatalogEntry:
    """A named word with its distinguished pair; ``second preceq first``."""

    name: str
    n: int
    word: ReducedWord
    first: Subexpression
    second: Subexpression


def catalog(name: str, n: int = 3) -> CatalogEntry:
    """Exact transliterations of the known counterexample words and masks."""
    if name == CLOSURE_OBSTRUCTION:
        if n < 3:
            raise ValueError("closure-obstruction needs n >= 3")
        ctx = context("B", n)
        block = list(range(n, 1, -1)) + [1] + list(range(2, n))
        word = ReducedWord(ctx, tuple(block + block))
        length = 4 * n - 4
        gamma_zeros = {1, n, 2 * n - 1, 3 * n - 2}
        gamma = subexpression(
            word, [0 if i in gamma_zeros else 1 for i in range(1, length + 1)]
        )
        delta = subexpression(
            word,
            [
                0 if i == 1 or (n + 1 <= i <= 3 * n - 3) else 1
                for i in range(1, length + 1)
            ],
        )
        return CatalogEntry(name, n, word, gamma, delta)
    if name == DISJOINTNESS:
        if n != 3:
            raise ValueError("disjointness is a rank 3 catalog entry")
        ctx = context("B", 3)
        word = ReducedWord(ctx, (3, 2, 1, 2, 3, 2, 1, 2, 1))
        sigma = subexpression(word, "010101101")
        tau = subexpression(word, "011001011")
        return CatalogEntry(name, n, word, sigma, tau)
    if name == DISJOINTNESS_EXTENDED:
        if n < 4:
            raise ValueError(
                "disjointness-extended needs n >= 4 (at n = 3 the prefixed "
                "word is no longer reduced)"
            )
        ctx = context("B", n)
        prefix_letters = tuple(range(n, 0, -1)) + tuple(range(2, n + 1))
        prefix_word = ReducedWord(ctx, prefix_letters)
        eta_mask = [0] * (2 * n - 1)
        eta_mask[n - 2] = 1  # position n-1, letter t_2
        eta_mask[n] = 1  # position n+1, letter t_2
        eta = subexpression(prefix_word, eta_mask)
        base_word = ReducedWord(ctx, (3, 2, 1, 2, 3, 2, 1, 2, 1))
        sigma = subexpression(base_word, "010101101")
        tau = subexpression(base_word, "011001011")
        first = eta.concat(sigma)
        second = eta.concat(tau)
        return CatalogEntry(name, n, first.word, first, second)
    raise ValueError(f"unknown catalog entry {name!r}")


@dataclass(frozen=True)
class ObstructionReport:
    """An ordered pair related by the closure order whose dimensions forbid
    containment of the second cell in the first cell's closure."""

    first: CellDescriptor
    second: CellDescriptor
    strictly_preceq: bool
    dim_violation: bool

    def to_obj(self) -> dict:
        return {
            "first_mask": self.first.mask_string,
            "second_mask": self.second.mask_string,
            "first_dim": self.first.dimension,
            "second_dim": self.second.dimension,
            "strictly_preceq": self.strictly_preceq,
            "dim_violation": self.dim_violation,
        }


def find_obstructions(word: ReducedWord) -> list[ObstructionReport]:
    """All ordered distinguished pairs (gamma, delta) with delta strictly
    below gamma in the closure order and dim(delta) >= dim(gamma).

    Equal dimensions already qualify: two distinct cells of equal dimension
    cannot be contained in one another's closures either.
    """
    if len(word) > SCAN_BOUND:
        raise ValueError(f"word length {len(word)} exceeds {SCAN_BOUND}")
    descriptors = [
        cell(sub) for sub in enumerate_subexpressions(word, distinguished_only=True)
    ]
    out = []
    for gamma in descriptors:
        for delta in descriptors:
            if gamma.sub == delta.sub or delta.dimension < gamma.dimension:
                continue
            if preceq(delta.sub, gamma.sub):
                out.append(
                    ObstructionReport(
                        first=gamma,
                        second=delta,
                        strictly_preceq=True,
                        dim_violation=True,
                    )
                )
    out.sort(key=lambda rep: (rep.first.sub.mask_int, rep.second.sub.mask_int))
    return out


@dataclass(frozen=True)
class DisjointnessCertificate:
    """A negative simple root absent from the first coordinate sequence and
    forced nonzero (free, unique) in the second.

    Soundness: the first cell then lies in a proper closed subvariety cut out
    by the vanishing of that coordinate direction, while every point of the
    second cell has it nonzero; a simple root is not a sum of other negative
    roots, so no commutator rewriting can reintroduce the coordinate.  Hence
    the closure of the first cell misses the second cell entirely.
    """

    root: Root
    witness_index: int
    absent_in_first: bool
    unique_in_second: bool
    witness_free: bool

    def to_obj(self) -> dict:
        return {
            "root": list(self.root.coeffs),
            "witness_index": self.witness_index,
            "absent_in_first": self.absent_in_first,
            "unique_in_second": self.unique_in_second,
            "witness_free": self.witness_free,
        }


def disjointness_certificate(
    first: Subexpression, second: Subexpression
) -> DisjointnessCertificate | None:
    """Search for a certificate that closure(cell(first)) misses cell(second)."""
    if first.word != second.word:
        raise ValueError("certificate needs subexpressions of one word")
    if not (is_distinguished(first) and is_distinguished(second)):
        raise ValueError("certificate needs distinguished subexpressions")
    if first.endpoint != second.endpoint:
        raise ValueError("certificate needs equal endpoints")
    phi_first = root_sequence(first)
    phi_second = root_sequence(second)
    rank = first.word.ctx.rank
    for b in range(1, rank + 1):
        target = -_simple(first.word.ctx, b)
        if any(entry.root == target for entry in phi_first):
            continue
        occurrences = [entry for entry in phi_second if entry.root == target]
        if len(occurrences) == 1 and occurrences[0].free:
            return DisjointnessCertificate(
                root=target,
                witness_index=occurrences[0].index,
                absent_in_first=True,
                unique_in_second=True,
                witness_free=True,
            )
    return None


def _simple(ctx, i: int) -> Root:
    from .roots import root_system

    return root_system(ctx.family, ctx.rank).simple(i)


@dataclass(frozen=True)
class CertifiedPair:
    first: CellDescriptor
    second: CellDescriptor
    certificate: DisjointnessCertificate


def scan_disjointness(word: ReducedWord, v: WeylElement) -> list[CertifiedPair]:
    """All ordered pairs in one double cell with second preceq first and a
    disjointness certificate; every certified pair is a proven negative
    instance of the closure-intersection question."""
    if len(word) > SCAN_BOUND:
        raise ValueError(f"word length {len(word)} exceeds {SCAN_BOUND}")
    descriptors = cells_with_endpoint(word, v)
    out = []
    for first in descriptors:
        for second in descriptors:
            if first.sub == second.sub:
                continue
            if not preceq(second.sub, first.sub):
                continue
            certificate = disjointness_certificate(first.sub, second.sub)
            if certificate is not None:
                out.append(CertifiedPair(first, second, certificate))
    out.sort(key=lambda pair: (pair.first.sub.mask_int, pair.second.sub.mask_int))
    return out
