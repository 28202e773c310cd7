import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from package_safa.common_errors import InvalidArgumentError
from package_safa.safa_core import DataWord, is_deterministic, validate
from package_safa.safa_emptiness import is_empty, witness
from package_safa.safa_fixtures import safa_fixture
from package_safa.safa_reductions import (CnfFormula,
                                          cnf_to_membership_instance,
                                          cnf_to_safa, decode_assignment,
                                          is_satisfiable, literal_set,
                                          satisfies)
from package_safa.safa_semantics import accepts
from package_safa.utils_sampling import random_cnf

from .helpers import SEED_MAX, has_cycle

SATISFIABLE = CnfFormula(3, ((1, -2, 3), (1, 2, 3)))
UNSATISFIABLE = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))


def test_literal_set() -> None:
    assert [literal_set(literal) for literal in (1, -1, 3, -3)] \
        == [1, 2, 5, 6]


@pytest.mark.parametrize('variable_count, clauses',
                         [(0, ()), (2, ((),)), (2, ((3,),)), (2, ((0,),))])
def test_cnf_formula_rejects_malformed_input(
        variable_count: int, clauses: tuple[tuple[int, ...], ...]) -> None:
    with pytest.raises(InvalidArgumentError):
        CnfFormula(variable_count, clauses)


def test_gadget_shape() -> None:
    a = cnf_to_safa(SATISFIABLE)
    assert validate(a) == []
    assert is_deterministic(a)
    assert a.states == ('q0', 'qv1', 'qv2', 'qv3', 'qc1', 'qc2')
    assert a.alphabet == ('a1', 'a2', 'a3')
    assert a.set_count == 6
    assert a.finals == frozenset({'qc2'})
    assert not has_cycle(a)
    assert has_cycle(safa_fixture('fig1'))
    assert [str(t) for t in a.transitions[:2]] \
        == ['q0 a1 !p1 ins1 qv1', 'q0 a2 !p2 ins2 qv1']
    assert [str(t) for t in a.transitions[6:9]] \
        == ['qv3 a1 p1 - qc1', 'qv3 a2 p4 - qc1', 'qv3 a3 p5 - qc1']


def test_witness_decodes_to_satisfying_assignment() -> None:
    found = witness(cnf_to_safa(SATISFIABLE))
    assert found is not None
    assert len(found) == 5
    assert satisfies(SATISFIABLE, decode_assignment(SATISFIABLE, found))


def test_unsatisfiable_gadget_is_empty() -> None:
    assert not is_satisfiable(UNSATISFIABLE)
    assert is_empty(cnf_to_safa(UNSATISFIABLE))


def test_formula_without_clauses() -> None:
    f = CnfFormula(2, ())
    a = cnf_to_safa(f)
    assert a.alphabet == ('a1', 'a2')
    assert a.finals == frozenset({'qv2'})
    assert not is_empty(a)


def test_membership_instance() -> None:
    a, w = cnf_to_membership_instance(SATISFIABLE)
    assert a.alphabet == ('a',)
    assert str(w) == 'a:1 a:1 a:1 a:1 a:1'
    assert accepts(a, w)

    b, v = cnf_to_membership_instance(UNSATISFIABLE)
    assert len(v) == 3
    assert len(b.transitions) == 4
    assert not accepts(b, v)


def test_decode_assignment_rejects_bad_words() -> None:
    with pytest.raises(InvalidArgumentError):
        decode_assignment(SATISFIABLE, DataWord((('a1', 1),)))
    with pytest.raises(InvalidArgumentError):
        decode_assignment(SATISFIABLE,
                          DataWord((('a1', 1), ('a3', 2), ('a1', 3))))


def test_satisfies_checks_assignment_length() -> None:
    assert satisfies(SATISFIABLE, (False, True, True))
    assert not satisfies(SATISFIABLE, (False, True, False))
    with pytest.raises(InvalidArgumentError):
        satisfies(SATISFIABLE, (True,))


@settings(max_examples=200, deadline=None)
@given(integers(0, SEED_MAX))
def test_gadgets_agree_with_truth_table(seed: int) -> None:
    f = random_cnf(np.random.default_rng(seed))
    satisfiable = is_satisfiable(f)

    a = cnf_to_safa(f)
    assert not has_cycle(a)
    assert is_empty(a) != satisfiable
    found = witness(a)
    if found is not None:
        assert satisfies(f, decode_assignment(f, found))

    b, w = cnf_to_membership_instance(f)
    assert accepts(b, w) == satisfiable
