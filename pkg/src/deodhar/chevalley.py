"""Symbolic calculus in the unipotent radical spanned by the negative roots.

A :class:`UnipotentWord` is an ordered product of one-parameter factors
``u_alpha(c)`` with ``alpha`` a negative root and ``c`` an exact Laurent
polynomial.  :func:`collect` rewrites such a product into the canonical form
with one factor per root, sorted by a fixed total order, using the Chevalley
commutator formula

    u_alpha(x) u_beta(y) = [u_alpha(x); u_beta(y)] u_beta(y) u_alpha(x),
    [u_alpha(x); u_beta(y)] = prod u_{i beta + j alpha}(C_ij (-y)^i x^j).

Collection terminates because every commutator factor sits strictly deeper
in the root lattice than the factor being moved, so the multiset of factors
at the currently minimal depth can only shrink.

Everything symbolic is double-checked against a numeric oracle: the exact
adjoint representation built from the structure-constant table.  Each
``ad e_alpha`` is nilpotent, its divided powers ``(ad e_alpha)^k / k!`` are
integer matrices (this integrality is asserted, it is the Chevalley lattice
property), so ``u_alpha(c)`` acts by a finite integral sum and whole words
can be multiplied out exactly over Q or modulo a prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .cells import root_sequence
from .laurent import LaurentPoly, Monomial
from .roots import Root, root_system
from .search import CLOSURE_OBSTRUCTION, catalog


class VerificationError(Exception):
    """A machine-checked claim failed; carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LimitError(ValueError):
    """The requested limit does not exist (a coefficient is unbounded)."""


@dataclass(frozen=True)
class Factor:
    root: Root
    coeff: LaurentPoly

    def __str__(self) -> str:
        return f"u[{self.root}]({self.coeff})"


@dataclass(frozen=True)
class UnipotentWord:
    """Ordered product of negative-root factors; zero factors are dropped."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        kept = []
        for f in self.factors:
            if f.coeff.is_zero():
                continue
            if not f.root.is_negative:
                raise ValueError(f"factor root {f.root} is not negative")
            kept.append(f)
        if len({(f.root.family, f.root.rank) for f in kept}) > 1:
            raise ValueError("factors from different root systems")
        object.__setattr__(self, "factors", tuple(kept))

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "UnipotentWord") -> "UnipotentWord":
        return UnipotentWord(_merge_adjacent(self.factors + other.factors))

    def support(self) -> set[Root]:
        return {f.root for f in self.factors}

    def coefficient(self, root: Root) -> LaurentPoly:
        total = LaurentPoly.zero()
        for f in self.factors:
            if f.root == root:
                total = total + f.coeff
        return total

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors) if self.factors else "1"

    def to_obj(self) -> list[dict]:
        return [
            {"root": list(f.root.coeffs), "coeff": f.coeff.to_obj()}
            for f in self.factors
        ]

    @staticmethod
    def from_obj(ctx, obj: Iterable[dict]) -> "UnipotentWord":
        system = root_system(ctx.family, ctx.rank)
        factors = []
        for item in obj:
            root = system.root(tuple(int(c) for c in item["root"]))
            factors.append(Factor(root, LaurentPoly.from_obj(item["coeff"])))
        return UnipotentWord(tuple(factors))


def word_from_pairs(pairs: Iterable[tuple[Root, LaurentPoly]]) -> UnipotentWord:
    return UnipotentWord(tuple(Factor(r, c) for r, c in pairs))


def canonical_key(root: Root) -> tuple:
    """Default total order on the negative roots: depth, then lex."""
    return (root.depth, tuple(-c for c in root.coeffs))


def _merge_adjacent(factors: Sequence[Factor]) -> tuple[Factor, ...]:
    out: list[Factor] = []
    for f in factors:
        if f.coeff.is_zero():
            continue
        if out and out[-1].root == f.root:
            merged = out.pop().coeff + f.coeff
            if not merged.is_zero():
                out.append(Factor(f.root, merged))
        else:
            out.append(f)
    return tuple(out)


def _commutator_factors(left: Factor, right: Factor) -> list[Factor]:
    system = root_system(left.root.family, left.root.rank)
    x, y = left.coeff, right.coeff
    out = []
    for term in system.commutator_terms(left.root, right.root):
        coeff = ((-y) ** term.i) * (x ** term.j) * term.constant
        if not coeff.is_zero():
            out.append(Factor(term.root, coeff))
    return out


def collect(
    word: UnipotentWord, key: Callable[[Root], tuple] = canonical_key
) -> UnipotentWord:
    """Canonical form: factors sorted by ``key``, one per root, same group
    element (the adjoint oracle re-checks this in the tests)."""
    work = list(_merge_adjacent(word.factors))
    out: list[Factor] = []
    while work:
        k = min(range(len(work)), key=lambda idx: (key(work[idx].root), idx))
        vanished = False
        while k > 0:
            left, mine = work[k - 1], work[k]
            if left.root == mine.root:
                merged = left.coeff + mine.coeff
                if merged.is_zero():
                    del work[k - 1 : k + 1]
                    vanished = True
                    break
                work[k - 1 : k + 1] = [Factor(mine.root, merged)]
                k -= 1
            else:
                terms = _commutator_factors(left, mine)
                work[k - 1 : k + 1] = terms + [mine, left]
                k += len(terms) - 1
        if vanished:
            continue
        front = work.pop(0)
        if out and out[-1].root == front.root:
            merged = out.pop().coeff + front.coeff
            if not merged.is_zero():
                out.append(Factor(front.root, merged))
        else:
            out.append(front)
    return UnipotentWord(tuple(out))


def is_canonical(word: UnipotentWord, key: Callable[[Root], tuple] = canonical_key) -> bool:
    keys = [key(f.root) for f in word.factors]
    return all(a < b for a, b in zip(keys, keys[1:]))


def limit_at_infinity(word: UnipotentWord, var: str) -> UnipotentWord:
    """Send ``var`` to infinity in a canonical-form word.

    Every coefficient must have only nonpositive exponents of ``var``; the
    strictly negative parts vanish in the limit.  A positive exponent means
    the coefficient is unbounded and the limit does not exist.
    """
    if not is_canonical(word):
        raise ValueError("limit requires a canonical-form word")
    kept = []
    for f in word.factors:
        if f.coeff.max_exponent(var) > 0:
            raise LimitError(
                f"coefficient {f.coeff} of {f.root} grows with {var}"
            )
        limit_coeff = f.coeff.terms_with_exponent(var, 0)
        if not limit_coeff.is_zero():
            kept.append(Factor(f.root, limit_coeff))
    return UnipotentWord(tuple(kept))


# -- exact adjoint representation ---------------------------------------------


Matrix = tuple[tuple, ...]


def mat_identity(dim: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def mat_mul(a: Matrix, b: Matrix, prime: int | None = None) -> Matrix:
    cols = tuple(zip(*b))
    if prime is None:
        return tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
        )
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % prime for col in cols)
        for row in a
    )


def _mat_is_zero(a: Matrix) -> bool:
    return all(all(v == 0 for v in row) for row in a)


class AdjointRep:
    """ad matrices on the Chevalley basis (h_1..h_n, then the root vectors)."""

    MAX_NILPOTENCY = 5

    def __init__(self, ctx):
        system = root_system(ctx.family, ctx.rank)
        self.ctx = ctx
        self.system = system
        pos = [r.coeffs for r in system.positive_roots]
        neg = [tuple(-c for c in t) for t in pos]
        self.basis: list = [("h", i) for i in range(1, ctx.rank + 1)]
        self.basis += [("e", t) for t in pos + neg]
        self.index = {label: k for k, label in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._ad: dict[tuple, Matrix] = {}
        self._divided: dict[tuple, list[Matrix]] = {}
        for t in pos + neg:
            self._ad[t] = self._build_ad(t)

    def _build_ad(self, alpha: tuple[int, ...]) -> Matrix:
        system = self.system
        n = self.ctx.rank
        rows = [[0] * self.dim for _ in range(self.dim)]
        arow = self.index[("e", alpha)]
        root_a = system.root(alpha)
        for j in range(1, n + 1):
            rows[arow][self.index[("h", j)]] = -system.cartan_pairing(alpha, j)
        for label in self.basis:
            if label[0] != "e":
                continue
            beta = label[1]
            col = self.index[label]
            total = tuple(a + b for a, b in zip(alpha, beta))
            if all(v == 0 for v in total):
                for j, c in enumerate(system.coroot_coords(root_a), start=1):
                    rows[self.index[("h", j)]][col] = c
            elif total in system.root_tuples:
                value = system.structure_constant(root_a, system.root(beta))
                rows[self.index[("e", total)]][col] = value
        return tuple(tuple(row) for row in rows)

    def ad(self, root: Root) -> Matrix:
        return self._ad[root.coeffs]

    def ad_cartan(self, j: int) -> Matrix:
        rows = [[0] * self.dim for _ in range(self.dim)]
        for label in self.basis:
            if label[0] == "e":
                k = self.index[label]
                rows[k][k] = self.system.cartan_pairing(label[1], j)
        return tuple(tuple(row) for row in rows)

    def divided_powers(self, root: Root) -> list[Matrix]:
        """[I, ad, ad^2/2!, ...] until zero; all entries are integers."""
        key = root.coeffs
        if key not in self._divided:
            powers = [mat_identity(self.dim)]
            current = self.ad(root)
            k = 1
            while not _mat_is_zero(current):
                if k > self.MAX_NILPOTENCY:
                    raise AssertionError(f"ad e_{root} is not nilpotent of index <= 5")
                powers.append(current)
                nxt = mat_mul(current, self.ad(root))
                scaled = []
                for row in nxt:
                    out_row = []
                    for v in row:
                        q, r = divmod(v, k + 1)
                        if r:
                            raise AssertionError("divided power is not integral")
                        out_row.append(q)
                    scaled.append(tuple(out_row))
                current = tuple(scaled)
                k += 1
            self._divided[key] = powers
        return self._divided[key]

    def exp_factor(self, root: Root, value, prime: int | None = None) -> Matrix:
        value = Fraction(value)
        if prime is not None:
            scalar = _mod_fraction(value, prime)
        elif value.denominator == 1:
            scalar = value.numerator  # integer fast path
        else:
            scalar = value
        powers = self.divided_powers(root)
        total = [[0] * self.dim for _ in range(self.dim)]
        coeff = 1
        for k, mat in enumerate(powers):
            if k:
                coeff = coeff * scalar % prime if prime is not None else coeff * scalar
            for i, row in enumerate(mat):
                for j, v in enumerate(row):
                    if v:
                        total[i][j] += coeff * v
        if prime is not None:
            return tuple(tuple(v % prime for v in row) for row in total)
        return tuple(tuple(row) for row in total)

    def evaluate(
        self,
        word: UnipotentWord,
        assignment: Mapping[str, Fraction] | None = None,
        prime: int | None = None,
    ) -> Matrix:
        assignment = assignment or {}
        result = mat_identity(self.dim)
        for f in word.factors:
            value = f.coeff.evaluate(assignment)
            result = mat_mul(result, self.exp_factor(f.root, value, prime), prime)
        return result


def _mod_fraction(value: Fraction, prime: int) -> int:
    den = value.denominator % prime
    if den == 0:
        raise ValueError(f"denominator divisible by {prime}")
    return value.numerator % prime * pow(den, -1, prime) % prime


_ADJOINT: dict[tuple[str, int], AdjointRep] = {}


def adjoint_rep(ctx) -> AdjointRep:
    key = (ctx.family, ctx.rank)
    if key not in _ADJOINT:
        _ADJOINT[key] = AdjointRep(ctx)
    return _ADJOINT[key]


def evaluate_adjoint(
    ctx,
    word: UnipotentWord,
    assignment: Mapping[str, Fraction] | None = None,
    prime: int | None = None,
) -> Matrix:
    """Exact matrix of a word in the adjoint representation."""
    return adjoint_rep(ctx).evaluate(word, assignment, prime)


# -- the closure witness ------------------------------------------------------


@dataclass(frozen=True)
class WitnessCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ClosureWitnessReport:
    """Outcome of the symbolic closure-intersection verification at rank n."""

    n: int
    psi: tuple[Root, ...]
    checks: tuple[WitnessCheck, ...]
    collected: UnipotentWord
    limit: UnipotentWord | None
    signs: tuple[tuple[str, str, int], ...]  # (word tag, root, realized sign)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"closure witness, rank n={self.n}"]
        out.append("psi = {" + "; ".join(str(r) for r in self.psi) + "}")
        for c in self.checks:
            out.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        for tag, root, sign in self.signs:
            out.append(f"sign {tag} u[{root}]: {'+' if sign > 0 else '-'}")
        return out


def _variable(name: str, k: int) -> LaurentPoly:
    return LaurentPoly.variable(f"{name}{k}")


def witness_psi(n: int) -> tuple[Root, ...]:
    system = root_system("B", n)
    doubled = tuple(-2 if k < n - 1 else -1 for k in range(n))
    chain = lambda k: tuple(-1 if k - 1 <= j <= n - 1 else 0 for j in range(n))
    roots = [system.root(doubled)]
    roots += [system.root(chain(k)) for k in range(2, n)]
    roots.append(-system.simple(n))
    return tuple(roots)


def build_closure_witness_words(n: int):
    """The two symbolic cell representatives whose collected forms exhibit an
    n-dimensional family inside both the deeper cell and the closure of the
    shallower one.  Returns (u_y, u_z, psi)."""
    if n < 3:
        raise ValueError("the witness construction needs rank n >= 3")
    entry = catalog(CLOSURE_OBSTRUCTION, n)
    gamma, delta = entry.first, entry.second
    phi_delta = root_sequence(delta)
    free_pattern = [e.free for e in phi_delta]
    expected_pattern = [True] * (2 * n - 2) + [False] * (n - 1)
    if free_pattern != expected_pattern:
        raise VerificationError(
            "coordinate pairing mismatch: free pattern of the deeper cell is "
            f"{free_pattern}, expected {expected_pattern}"
        )
    y_values = (
        [_variable("y", k) for k in range(1, n + 1)]
        + [-_variable("y", k) for k in range(n - 1, 1, -1)]
        + [LaurentPoly.zero()] * (n - 1)
    )
    u_y = word_from_pairs(
        (e.root, v) for e, v in zip(phi_delta, y_values) if not v.is_zero()
    )
    phi_gamma = root_sequence(gamma)
    if len(phi_gamma) != 2 * n:
        raise VerificationError(
            f"coordinate pairing mismatch: expected 2n coordinates, got {len(phi_gamma)}"
        )
    t = LaurentPoly.variable("t")
    t2 = LaurentPoly.variable("t", 2)
    z_values = (
        [_variable("z", n), _variable("z", 1) * t]
        + [_variable("z", k) * t2 for k in range(2, n)]
        + [LaurentPoly.variable("t", -2), -_variable("z", 1) * t]
        + [-_variable("z", k) * t2 for k in range(2, n)]
    )
    u_z = word_from_pairs(zip((e.root for e in phi_gamma), z_values))
    return u_y, u_z, witness_psi(n)


def _expected_witness_monomials(n: int, psi: Sequence[Root]):
    y_mono: dict[Root, Monomial] = {}
    z_mono: dict[Root, Monomial] = {}
    doubled, middles, last = psi[0], psi[1:-1], psi[-1]
    y_mono[doubled] = Monomial.from_mapping({f"y{k}": 1 for k in range(2, n + 1)})
    z_mono[doubled] = Monomial.of(z1=2)
    for k, root in enumerate(middles, start=2):
        y_mono[root] = Monomial.from_mapping({f"y{j}": 1 for j in range(k + 1, n + 1)})
        z_mono[root] = Monomial.of(**{f"z{k}": 1})
    y_mono[last] = Monomial.of(y1=1)
    z_mono[last] = Monomial.of(**{f"z{n}": 1})
    return y_mono, z_mono


def _check_support_and_monomials(word, expected, tag, checks, signs):
    support_ok = word.support() == set(expected)
    checks.append(
        WitnessCheck(
            f"{tag} support",
            support_ok,
            "supported exactly on psi"
            if support_ok
            else f"support {{{'; '.join(sorted(str(r) for r in word.support()))}}}",
        )
    )
    if not support_ok:
        return
    for root, mono in expected.items():
        coeff = word.coefficient(root)
        ok = False
        detail = str(coeff)
        try:
            value, actual = coeff.single_term()
            ok = actual == mono and abs(value) == 1
            if ok:
                signs.append((tag, str(root), 1 if value > 0 else -1))
                detail = f"{coeff} matches {mono} up to sign"
        except ValueError:
            pass
        checks.append(WitnessCheck(f"{tag} monomial at {root}", ok, detail))


def verify_closure_witness(n: int) -> ClosureWitnessReport:
    """Machine-check the three claims behind the closure intersection:

    (a) the collected deeper-cell word is supported exactly on psi with the
        monomials (y_1; y_2...y_n; y_3...y_n; ...; y_n) up to sign;
    (b) the collected shallower-cell word admits a limit at t = infinity,
        supported exactly on psi with monomials (z_n; z_1^2; z_2; ...; z_{n-1})
        up to sign;
    (c) no sum of two distinct psi roots is a root, so the psi factors commute.

    Raises :class:`VerificationError` if any assertion fails.
    """
    u_y, u_z, psi = build_closure_witness_words(n)
    checks: list[WitnessCheck] = []
    signs: list[tuple[str, str, int]] = []
    y_expected, z_expected = _expected_witness_monomials(n, psi)

    collected_y = collect(u_y)
    _check_support_and_monomials(collected_y, y_expected, "u_y", checks, signs)

    limit_word = None
    collected_z = collect(u_z)
    try:
        limit_word = limit_at_infinity(collected_z, "t")
        checks.append(WitnessCheck("u_z limit", True, "limit at t=infinity exists"))
        _check_support_and_monomials(limit_word, z_expected, "lim u_z", checks, signs)
    except LimitError as err:
        checks.append(WitnessCheck("u_z limit", False, str(err)))

    commuting = all(
        a.try_add(b) is None for i, a in enumerate(psi) for b in psi[i + 1 :]
    )
    checks.append(
        WitnessCheck(
            "psi commutes",
            commuting,
            "the sum of two elements of psi is never a root"
            if commuting
            else "some pair of psi roots sums to a root",
        )
    )

    report = ClosureWitnessReport(
        n=n,
        psi=psi,
        checks=tuple(checks),
        collected=collected_y,
        limit=limit_word,
        signs=tuple(signs),
    )
    if not report.passed:
        failing = [c.name for c in checks if not c.passed]
        raise VerificationError(f"witness verification failed: {failing}", report)
    return report
