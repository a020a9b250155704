"""Concrete rank 2 (SL_3) cross-checks over small prime fields.

The Borel subgroup is upper triangular, its opposite lower triangular, and
the Weyl group is the symmetric group on three letters acting by permutation
matrices.  The Bruhat word of an invertible matrix is read off from the rank
profile of its lower-left submatrices, which is constant on B x B orbits.

``count_cells`` tallies every flag of F_q^3 by its pair of relative
positions (w.r.t. the standard and the opposite base flag).  Enumerating the
unipotent radical alone cannot see the opposite position: a lower
unitriangular matrix always lies in the big cell.  Flags are enumerated once
each through canonical representatives.
"""

from __future__ import annotations

from itertools import product

from .weyl import WeylElement, context

MAX_PRIME = 64

Matrix = tuple[tuple[int, ...], ...]


def _ctx():
    return context("A", 2)


def unipotent_lower(a: int, b: int, c: int, q: int) -> Matrix:
    """The lower unitriangular matrix with parameters (a, b, c) over F_q."""
    return ((1, 0, 0), (a % q, 1, 0), (c % q, b % q, 1))


def _rank(rows: list[list[int]], q: int) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] % q), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, q)
        m[rank] = [v * inv % q for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] % q:
                factor = m[r][col]
                m[r] = [(v - factor * w) % q for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def _lower_left_rank(g: Matrix, i: int, j: int, q: int) -> int:
    """Rank of rows i..3, columns 1..j (1-based), over F_q."""
    if i > 3 or j < 1:
        return 0
    return _rank([list(row[:j]) for row in g[i - 1 :]], q)


def bruhat_word(g: Matrix, q: int) -> WeylElement:
    """The unique w with g in BwB, from the lower-left rank profile."""
    r = {(i, j): _lower_left_rank(g, i, j, q) for i in range(1, 5) for j in range(0, 4)}
    if r[(1, 3)] != 3:
        raise ValueError("matrix is singular")
    window = [0, 0, 0]
    for j in range(1, 4):
        for i in range(1, 4):
            if r[(i, j)] - r[(i + 1, j)] - r[(i, j - 1)] + r[(i + 1, j - 1)] == 1:
                window[j - 1] = i
                break
    return _ctx().from_window(tuple(window))


_W0_MATRIX: Matrix = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def _matmul(a: Matrix, b: Matrix, q: int) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % q for col in cols) for row in a
    )


def opposite_coset(g: Matrix, q: int) -> WeylElement:
    """The v with g in B*vB, where B* = w_0 B w_0."""
    ctx = _ctx()
    w0 = ctx.longest_element()
    return w0 * bruhat_word(_matmul(_W0_MATRIX, g, q), q)


def minors_criterion(g: Matrix, q: int) -> bool:
    """For lower unitriangular (a, b, c): membership in the big double coset
    B w_0 B, i.e. c != 0 and ab - c != 0."""
    if (
        g[0] != (1, 0, 0)
        or (g[1][1], g[1][2]) != (1, 0)
        or g[2][2] != 1
    ):
        raise ValueError("expected a lower unitriangular matrix")
    a, b, c = g[1][0], g[2][1], g[2][0]
    return c % q != 0 and (a * b - c) % q != 0


def unipotent_bruhat_counts(q: int) -> dict[WeylElement, int]:
    """Partition of the q^3 lower unitriangular matrices by Bruhat word."""
    _check_prime(q)
    counts: dict[WeylElement, int] = {}
    for a, b, c in product(range(q), repeat=3):
        w = bruhat_word(unipotent_lower(a, b, c, q), q)
        counts[w] = counts.get(w, 0) + 1
    return counts


def _canonical_lines(q: int) -> list[tuple[int, ...]]:
    lines = []
    for pivot in range(3):
        for rest in product(range(q), repeat=2 - pivot):
            vec = [0] * pivot + [1] + list(rest)
            lines.append(tuple(vec))
    return lines


def enumerate_flags(q: int):
    """One matrix per complete flag of F_q^3: columns span the flag steps."""
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for x in _canonical_lines(q):
        pivot = next(k for k in range(3) if x[k])
        others = [basis[k] for k in range(3) if k != pivot]
        # second column: canonical representatives of P^1 in a complement of x
        seconds = [
            tuple(u + s * v for u, v in zip(others[0], others[1]))
            for s in range(q)
        ] + [others[1]]
        for y in seconds:
            for z in basis:
                g = tuple(zip(x, y, z))  # columns x, y, z
                if _lower_left_rank(g, 1, 3, q) == 3:
                    yield g
                    break


def count_cells(q: int) -> dict[tuple[WeylElement, WeylElement], int]:
    """Exact table (w, v) -> number of flags in BwB with opposite position v."""
    _check_prime(q)
    counts: dict[tuple[WeylElement, WeylElement], int] = {}
    for g in enumerate_flags(q):
        key = (bruhat_word(g, q), opposite_coset(g, q))
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_cells_csv(q: int) -> str:
    """CSV rows (q, w, v, count) in deterministic order."""
    lines = ["q,w,v,count"]
    table = count_cells(q)
    for (w, v), count in sorted(
        table.items(), key=lambda item: (item[0][0].window, item[0][1].window)
    ):
        lines.append(f'{q},"{w.serialize()}","{v.serialize()}",{count}')
    return "\n".join(lines) + "\n"


def _check_prime(q: int):
    if q < 2 or q > MAX_PRIME:
        raise ValueError(f"q must be a prime with 2 <= q <= {MAX_PRIME}")
    if any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"{q} is not prime")
