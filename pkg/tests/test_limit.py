from collections import Counter
from fractions import Fraction

import pytest

from conftest import SUITE, fundamental_run, suite_ids
from wqt.cartan import LieType, root_data
from wqt.catalog import catalog, compare, is_covered
from wqt.engine import expand, fundamental
from wqt.errors import PreconditionError
from wqt.limit import collapse, render_collapsed, specialize_t1, weight_multiset, weight_sum
from wqt.monomial import Monomial, parse_monomial, shift


def test_collapse_drops_t():
    m = parse_monomial("Y[1](q^-2 t^2)^-1 Y[1](q^-2 t^4)^-1 Y[2](q^1 t^1)")
    assert collapse(m) == Monomial([(1, (0, -2, 0), -2), (2, (0, 1, 0), 1)])
    assert render_collapsed(collapse(m)) == "Y[1,q^-2]^-2 * Y[2,q^1]"


def test_sl2_fundamental():
    qc = specialize_t1(fundamental(root_data("A1"), 1))
    assert qc.render() == "1*Y[1,q^0] + 1*Y[1,q^-2]^-1"
    assert weight_multiset(qc) == Counter({(1,): 1, (-1,): 1})


def test_sl2_example_field():
    fe = expand(root_data("A1"), parse_monomial("Y[1](q^0 t^0) Y[1](q^-2 t^0) Y[1](q^0 t^2)"))
    qc = specialize_t1(fe)
    assert len(qc) == 5
    # lambda_3 tends to 2(q^2+1)(q^2-1)^2 / ((q^4-1)(q^2-1)) = 2; the others tend to 1.
    assert sorted(qc.terms.values()) == [1, 1, 1, 1, 2]
    lam3 = collapse(parse_monomial("Y[1](q^0 t^0) Y[1](q^-4 t^2)^-1 Y[1](q^-2 t^4)^-1"))
    assert qc.terms[lam3] == 2


def test_a_chain():
    qc = specialize_t1(fundamental(root_data("A4"), 1))
    assert len(qc) == 5 and set(qc.terms.values()) == {1}


def test_b2_spinor_weights():
    qc = specialize_t1(fundamental(root_data("B2"), 2))
    assert weight_multiset(qc) == Counter({(0, 1): 1, (1, -1): 1, (-1, 1): 1, (0, -1): 1})


def test_c2_node2_weights_sum_to_zero():
    w = weight_multiset(specialize_t1(fundamental(root_data("C2"), 2)))
    assert sum(w.values()) == 5
    assert weight_sum(w) == (0, 0)


def test_weight_multiset_rejects_fractions():
    qc = specialize_t1(fundamental(root_data("A1"), 1))
    qc.terms[Monomial.Y(1, 5)] = Fraction(1, 2)
    with pytest.raises(ValueError):
        weight_multiset(qc)


def test_requires_completed_run():
    with pytest.raises(PreconditionError):
        specialize_t1(fundamental(root_data("D4"), 2))


@pytest.mark.parametrize("case", SUITE, ids=suite_ids())
def test_suite_is_thin(case):
    fe = fundamental_run(*case)
    qc = specialize_t1(fe)
    assert set(qc.terms.values()) == {1}
    assert len(qc) == len(fe.table)
    assert weight_sum(weight_multiset(qc)) == (0,) * fe.root_data.rank
    lt = fe.root_data.lie_type
    if is_covered(lt, case[2]):
        entry = catalog(lt, case[2])
        delta = compare(fe, entry).shift
        assert {collapse(shift(m, *delta)) for m in entry.monomials} == set(qc.terms)
