import pytest

from qkflag import walks, weyl
from qkflag.kclasses import signed_terms


def test_frozen_term_count_n2_k1():
    terms = walks.inverse_chevalley_terms(2, walks.prefix_element(2, 1))
    assert len(terms) == 4
    assert sorted(s for s, _ in terms) == [-1, -1, 1, 1]


def test_prefix_element():
    assert tuple(walks.prefix_element(3, 0)) == (1, 2, 3, 4)
    assert tuple(walks.prefix_element(3, 2)) == (2, 3, 1, 4)


def test_varpi1_sequence_is_alpha_chain():
    seq = walks.varpi1_sequence(3)
    assert len(seq) == 3
    assert all(r.positive for r in seq)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_walk_classification(n):
    for k in range(n + 1):
        assert walks.check_walk_forms(n, k)
        forms = walks.expected_walk_forms(n, k)
        flat = [w for v in forms.values() for w in v]
        assert len(flat) == len(set(flat))
        assert (not forms["bruhat"]) == (k == n)
        assert (not forms["quantum"]) == (k == 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inverse_chevalley_matches_display(n):
    for k in range(n + 1):
        res = walks.assemble_inv_chevalley(n, k)
        assert res["equal"]
        assert walks.next_prefix_class(n, k) == walks.displayed_next_prefix_class(n, k)


def test_quantum_forms_use_only_quantum_edges():
    n, k = 3, 2
    for seq in walks.expected_walk_forms(n, k)["quantum"]:
        labels = walks.walk_edge_labels(n, seq)
        assert all(q for _, _, q in labels)


def test_signed_terms_canonical():
    w = weyl.identity(3)
    a = signed_terms([(1, (w, (0, 0), (0, 0, 0))), (-1, (w, (1, 0), (0, 0, 0)))])
    b = signed_terms([(-1, (w, (1, 0), (0, 0, 0))), (1, (w, (0, 0), (0, 0, 0)))])
    assert a == b
