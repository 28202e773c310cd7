from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from package_safa.common_errors import (InvalidArgumentError,
                                        InvalidAutomatonError)
from package_safa.safa_core import (NO_OP, Configuration, DataWord, Predicate,
                                    Safa, SetOp, Transition, is_deterministic,
                                    make_safa, rename_data, require_valid,
                                    validate)
from package_safa.safa_fixtures import hierarchy_safa
from package_safa.utils_sampling import random_safa

from .helpers import SEED_MAX


def test_predicate_holds_and_prints() -> None:
    sets = (frozenset({1, 2}), frozenset())
    assert Predicate.member(1).holds(2, sets)
    assert not Predicate.member(2).holds(2, sets)
    assert Predicate.not_member(2).holds(2, sets)
    assert str(Predicate.not_member(3)) == '!p3'
    assert Predicate.member(1).opposite() == Predicate.not_member(1)


def test_set_op_inserts_only_into_its_set() -> None:
    sets = (frozenset({1}), frozenset())
    assert SetOp.insert(2).apply(5, sets) == (frozenset({1}), frozenset({5}))
    assert NO_OP.apply(5, sets) is sets
    assert str(NO_OP) == '-' and str(SetOp.insert(2)) == 'ins2'


def test_data_word_projections() -> None:
    w = DataWord((('a', 1), ('b', 5), ('a', 1)))
    assert w.letters() == ('a', 'b', 'a')
    assert w.data() == (1, 5, 1)
    assert str(w.slice(1)) == 'b:5 a:1'
    assert len(DataWord()) == 0


def test_data_word_rejects_negative_data() -> None:
    with pytest.raises(InvalidArgumentError):
        DataWord((('a', -1),))


def test_configuration_describe_sorts_values() -> None:
    config = Configuration('q1', (frozenset({3, 1}), frozenset()))
    assert config.describe() == 'q1 h1={1,3} h2={}'


def test_reference_automata_are_valid(fig1: Safa, fig2: Safa, fig3: Safa,
                                      fig5: Safa, fig6: Safa) -> None:
    for a in (fig1, fig2, fig3, fig5, fig6, hierarchy_safa(3)):
        assert validate(a) == []


def test_validate_reports_out_of_bounds_guard() -> None:
    a = make_safa(['q0'], ['a'], 1, 'q0', ['q0'],
                  [('q0', 'a', '!p9', '-', 'q0')])
    problems = validate(a)
    assert len(problems) == 1
    assert 'transition 0' in problems[0]
    assert 'out of bounds' in problems[0]


def test_validate_reports_every_problem() -> None:
    a = Safa(states=('q0', 'q0'),
             alphabet=('a',),
             set_count=1,
             initial='q9',
             finals=frozenset({'q8'}),
             transitions=(Transition('q0', 'b', Predicate.member(1),
                                     SetOp.insert(2), 'q7'),))
    problems = validate(a)
    assert any('duplicate state q0' in problem for problem in problems)
    assert any('initial' in problem for problem in problems)
    assert any('final' in problem for problem in problems)
    assert any('undeclared letter b' in problem for problem in problems)
    assert any('insert set index 2' in problem for problem in problems)
    assert any('undeclared target q7' in problem for problem in problems)


def test_require_valid_carries_problems() -> None:
    a = make_safa(['q0'], ['a'], 1, 'q1', [], [])
    with pytest.raises(InvalidAutomatonError) as caught:
        require_valid(a)
    assert caught.value.problems == validate(a)


def test_determinism_of_reference_automata(fig1: Safa, fig2: Safa,
                                           fig6: Safa) -> None:
    assert is_deterministic(fig1)
    assert is_deterministic(fig6)
    assert not is_deterministic(fig2)


def test_same_guard_twice_is_not_deterministic() -> None:
    a = make_safa(['q0', 'q1'], ['a'], 1, 'q0', [],
                  [('q0', 'a', 'p1', '-', 'q0'), ('q0', 'a', 'p1', '-', 'q1')])
    assert not is_deterministic(a)


def test_guards_on_different_sets_are_not_deterministic() -> None:
    a = make_safa(['q0'], ['a'], 2, 'q0', [],
                  [('q0', 'a', 'p1', '-', 'q0'),
                   ('q0', 'a', '!p2', '-', 'q0')])
    assert not is_deterministic(a)


def test_is_deterministic_requires_valid_automaton() -> None:
    with pytest.raises(InvalidAutomatonError):
        is_deterministic(make_safa(['q0'], ['a'], 1, 'q1', [], []))


def test_rename_data() -> None:
    w = DataWord((('a', 1), ('b', 2), ('a', 1)))
    assert str(rename_data(w, {1: 10, 2: 20, 3: 10})) == 'a:10 b:20 a:10'


def test_rename_data_rejects_missing_datum() -> None:
    with pytest.raises(InvalidArgumentError):
        rename_data(DataWord((('a', 1), ('a', 2))), {1: 3})


def test_rename_data_rejects_non_injective_map() -> None:
    with pytest.raises(InvalidArgumentError):
        rename_data(DataWord((('a', 1), ('a', 2))), {1: 3, 2: 3})


def test_make_safa_rejects_malformed_tokens() -> None:
    with pytest.raises(InvalidArgumentError):
        make_safa(['q0'], ['a'], 1, 'q0', [], [('q0', 'a', 'x1', '-', 'q0')])
    with pytest.raises(InvalidArgumentError):
        make_safa(['q0'], ['a'], 1, 'q0', [],
                  [('q0', 'a', 'p1', 'add1', 'q0')])


@pytest.mark.parametrize('guard, op', [('p²', '-'), ('!p٣', '-'),
                                       ('p1', 'ins²')])
def test_make_safa_rejects_non_ascii_digits(guard: str, op: str) -> None:
    with pytest.raises(InvalidArgumentError):
        make_safa(['q0'], ['a'], 1, 'q0', [], [('q0', 'a', guard, op, 'q0')])


def test_outgoing_is_in_transition_order(fig1: Safa) -> None:
    assert [index for index, _ in fig1.outgoing('q0', 'a')] == [0, 3]
    assert fig1.outgoing('q1', 'a') == ()


@settings(max_examples=200, deadline=None)
@given(integers(0, SEED_MAX))
def test_determinism_ignores_transition_order(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = random_safa(rng)
    order = rng.permutation(len(a.transitions))
    shuffled = replace(a, transitions=tuple(a.transitions[int(index)]
                                            for index in order))
    assert is_deterministic(shuffled) == is_deterministic(a)
