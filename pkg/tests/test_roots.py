import pytest

from deodhar.roots import Root, commutator_terms, root_system
from deodhar.weyl import context


@pytest.mark.parametrize("rank", range(2, 9))
def test_positive_root_counts(rank):
    assert len(root_system("B", rank).positive_roots) == rank * rank
    assert len(root_system("A", rank).positive_roots) == rank * (rank + 1) // 2


def test_b3_list_matches_ambient_description():
    # independent route: type B positive roots are e_j and e_j +- e_k (k < j)
    system = root_system("B", 3)
    ambient = set()
    for j in range(3):
        vec = [0, 0, 0]
        vec[j] = 1
        ambient.add(tuple(vec))
        for k in range(j):
            for sign in (1, -1):
                vec = [0, 0, 0]
                vec[j] = 1
                vec[k] = sign
                ambient.add(tuple(vec))
    generated = {system.to_ambient(r.coeffs) for r in system.positive_roots}
    assert generated == ambient


def test_a2_positive_roots():
    system = root_system("A", 2)
    assert {r.coeffs for r in system.positive_roots} == {(1, 0), (0, 1), (1, 1)}


def test_doubled_root_present():
    for n in (3, 4, 5):
        system = root_system("B", n)
        doubled = tuple(2 if k < n - 1 else 1 for k in range(n))
        assert system.is_root(doubled)


def test_is_root_examples():
    system = root_system("B", 3)
    assert system.is_root((1, 1, 0))
    assert not system.is_root((0, 2, 0))
    assert not system.is_root((0, 0, 0))


def test_root_validation_and_classification():
    system = root_system("B", 3)
    with pytest.raises(ValueError):
        Root("B", 3, (1, 2, 0))
    short = system.root((1, 1, 1))  # e_3
    long_ = system.root((0, 1, 1))  # e_3 - e_1
    assert short.is_short and not short.is_long
    assert long_.is_long
    assert short.height == 3 and (-short).depth == 3


def test_roots_closed_under_weyl_action():
    system = root_system("B", 3)
    ctx = context("B", 3)
    for w in ctx.elements():
        for r in system.all_roots():
            w.act_on_root(r)  # raises if the image is not a root


def test_root_string_examples():
    for n in (3, 4):
        system = root_system("B", n)
        alpha = system.root(tuple(-1 if k < n - 1 else 0 for k in range(n)))
        beta = -system.simple(n)
        assert system.root_string(alpha, beta) == (0, 2)
    system = root_system("B", 3)
    b1, b3 = system.simple(1), system.simple(3)
    assert system.root_string(b1, b3) == (0, 0)
    with pytest.raises(ValueError):
        system.root_string(b1, b1)


def test_root_string_against_direct_scan():
    system = root_system("B", 3)
    roots = system.all_roots()
    for alpha in roots:
        for beta in roots:
            if alpha.coeffs == beta.coeffs or alpha.coeffs == (-beta).coeffs:
                continue
            p, q = system.root_string(alpha, beta)
            down = {
                k
                for k in range(1, 5)
                if system.is_root(
                    tuple(b - k * a for a, b in zip(alpha.coeffs, beta.coeffs))
                )
            }
            up = {
                k
                for k in range(1, 5)
                if system.is_root(
                    tuple(b + k * a for a, b in zip(alpha.coeffs, beta.coeffs))
                )
            }
            assert down == set(range(1, p + 1))
            assert up == set(range(1, q + 1))


def test_structure_constant_basics():
    system = root_system("B", 3)
    b1, b2 = system.simple(1), system.simple(2)
    assert system.structure_constant(b1, b2) in (1, -1)
    with pytest.raises(ValueError):
        system.structure_constant(b1, system.simple(3))


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("B", 4)])
def test_structure_constant_table_properties(family, rank):
    system = root_system(family, rank)
    roots = system.all_roots()
    for alpha in roots:
        for beta in roots:
            total = alpha.try_add(beta)
            if total is None:
                continue
            n_ab = system.structure_constant(alpha, beta)
            assert n_ab == -system.structure_constant(beta, alpha)
            assert n_ab == -system.structure_constant(-alpha, -beta)
            p, _ = system.root_string(alpha, beta)
            assert abs(n_ab) == p + 1


def test_extraspecial_pairs_positive():
    system = root_system("B", 3)
    for total, (r, s) in system.structure.extraspecial.items():
        assert system.structure_constant(system.root(r), system.root(s)) > 0


def test_commutator_terms_empty_when_sum_not_root():
    system = root_system("B", 3)
    alpha, beta = -system.simple(1), -system.simple(3)
    assert commutator_terms(alpha, beta) == []


def test_commutator_terms_single_case():
    # alpha = -beta_2, beta = -(beta_3 + ... + beta_n): one term at alpha+beta
    system = root_system("B", 3)
    alpha = -system.simple(2)
    beta = -system.root((0, 0, 1))
    terms = system.commutator_terms(alpha, beta)
    assert [(t.i, t.j) for t in terms] == [(1, 1)]
    assert terms[0].root == system.root((0, -1, -1))
    assert abs(terms[0].constant) == 1


def test_commutator_terms_doubled_case():
    # alpha = -(beta_1 + ... + beta_{n-1}) short, beta = -beta_n: terms at
    # alpha+beta and 2 alpha+beta, both with unit constants
    for n in (3, 4, 5):
        system = root_system("B", n)
        alpha = system.root(tuple(-1 if k < n - 1 else 0 for k in range(n)))
        beta = -system.simple(n)
        terms = system.commutator_terms(alpha, beta)
        assert [(t.i, t.j) for t in terms] == [(1, 1), (1, 2)]
        assert terms[0].root.coeffs == tuple(-1 for _ in range(n))
        assert terms[1].root.coeffs == tuple(-2 if k < n - 1 else -1 for k in range(n))
        assert {abs(t.constant) for t in terms} == {1}


def test_conjugation_formula_cases_b5():
    """The five commutator configurations met by the collection engine, at
    rank 5: supports and unit magnitudes."""
    n = 5
    system = root_system("B", n)

    def chain(i, j):
        return system.root(tuple(1 if i - 1 <= k <= j - 1 else 0 for k in range(n)))

    # (i) sum not a root: no terms
    assert system.commutator_terms(-system.simple(1), -system.simple(n)) == []
    # (ii) alpha = -b_i, beta = -(b_{i+1}+..+b_n)
    for i in range(2, n):
        terms = system.commutator_terms(-system.simple(i), -chain(i + 1, n))
        assert [(t.i, t.j) for t in terms] == [(1, 1)]
        assert terms[0].root == -chain(i, n) and abs(terms[0].constant) == 1
    # (iii) alpha = -(2b_1+b_2+..+b_{n-1}), beta = -(b_2+..+b_n)
    doubled_head = system.root(
        tuple(2 if k == 0 else (1 if k <= n - 2 else 0) for k in range(n))
    )
    terms = system.commutator_terms(-doubled_head, -chain(2, n))
    assert [(t.i, t.j) for t in terms] == [(1, 1)]
    assert abs(terms[0].constant) == 1
    assert terms[0].root.coeffs == tuple(-2 if k <= n - 2 else -1 for k in range(n))
    # (iv) alpha = -(b_i+..+b_{n-1}), beta = -b_n
    for i in range(2, n):
        terms = system.commutator_terms(-chain(i, n - 1), -system.simple(n))
        assert [(t.i, t.j) for t in terms] == [(1, 1)]
        assert terms[0].root == -chain(i, n) and abs(terms[0].constant) == 1
    # (v) alpha = -(b_1+..+b_{n-1}) short, beta = -b_n: two terms
    terms = system.commutator_terms(-chain(1, n - 1), -system.simple(n))
    assert [(t.i, t.j) for t in terms] == [(1, 1), (1, 2)]
    assert {abs(t.constant) for t in terms} == {1}


def test_commutator_terms_ordering_by_weight():
    system = root_system("B", 4)
    roots = system.all_roots()
    for alpha in roots:
        for beta in roots:
            if alpha.coeffs == beta.coeffs or alpha.coeffs == (-beta).coeffs:
                continue
            terms = system.commutator_terms(alpha, beta)
            weights = [t.i + t.j for t in terms]
            assert weights == sorted(weights)
            for t in terms:
                assert t.constant != 0


def test_cartan_pairing_values():
    system = root_system("B", 3)
    b1, b2 = system.simple(1), system.simple(2)
    # double bond between the first two nodes: <beta_2, beta_1-check> = -2
    assert system.cartan_pairing(b2.coeffs, 1) == -2
    assert system.cartan_pairing(b1.coeffs, 2) == -1
    assert system.cartan_pairing(b1.coeffs, 1) == 2


def test_serialization():
    system = root_system("B", 3)
    r = system.root((2, 1, 0))
    assert r.serialize() == "2,1,0"
    from deodhar.roots import parse_root

    assert parse_root(context("B", 3), "2,1,0") == r
