from itertools import islice

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from package_safa.common_errors import (InvalidArgumentError,
                                        InvalidAutomatonError)
from package_safa.safa_core import (Configuration, DataWord, Safa, make_safa,
                                    rename_data)
from package_safa.safa_fixtures import oracle
from package_safa.safa_format import parse_word
from package_safa.safa_semantics import (accepts, find_accepting_run, pump,
                                         pump_decomposition,
                                         run_deterministic, step)
from package_safa.utils_sampling import (enumerate_words, random_injection,
                                         random_safa, random_word)

from .helpers import SEED_MAX, brute_force_accepts, words


def test_step_orders_successors_by_transition_index(fig2: Safa) -> None:
    start = Configuration.initial(fig2)
    successors = step(fig2, start, ('a', 1))
    assert [index for index, _ in successors] == [3, 4]
    assert successors[1][1].describe() == 'q1 h1={} h2={1}'


def test_step_rejects_unknown_letter(fig1: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        step(fig1, Configuration.initial(fig1), ('c', 1))


def test_fig1_accepts_distinct_a_data(fig1: Safa) -> None:
    assert accepts(fig1, DataWord())
    assert accepts(fig1, parse_word('a:1 b:1 a:2 b:1'))
    assert not accepts(fig1, parse_word('a:1 b:3 a:1'))


def test_accepts_rejects_unknown_letter(fig1: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        accepts(fig1, parse_word('c:1'))


def test_accepts_requires_valid_automaton() -> None:
    a = make_safa(['q0'], ['a'], 1, 'q0', [], [('q0', 'a', 'p2', '-', 'q0')])
    with pytest.raises(InvalidAutomatonError):
        accepts(a, DataWord())


def test_find_accepting_run_follows_transition_order(fig2: Safa) -> None:
    run = find_accepting_run(fig2, parse_word('a:1'))
    assert run is not None
    assert run.steps == ((4, 1),)
    assert run.last.describe() == 'q1 h1={} h2={1}'
    assert run.states() == ('q0', 'q1')


def test_find_accepting_run_on_rejected_word(fig5: Safa) -> None:
    assert find_accepting_run(fig5, parse_word('a:1 a:2')) is None


@pytest.mark.parametrize('lang, name, max_length',
                         [('fd(a)', 'fig1', 5),
                          ('a_exists_b', 'fig6', 5),
                          ('exists_cnt_ne_2', 'fig2', 6)])
def test_reference_automata_match_oracles(lang: str, name: str,
                                          max_length: int,
                                          request: pytest.FixtureRequest) \
        -> None:
    a: Safa = request.getfixturevalue(name)
    for w in words(a, [1, 2, 3], max_length):
        assert accepts(a, w) == oracle(lang, w), str(w)


def test_run_deterministic_reports_stuck_position(fig1: Safa) -> None:
    assert run_deterministic(fig1, parse_word('a:1 a:1 a:2')) == (False, 2)


def test_run_deterministic_ends_in_non_final_state(fig6: Safa) -> None:
    accepted, run = run_deterministic(fig6, parse_word('a:1'))
    assert not accepted
    assert run.last.state == 'q1'


def test_run_deterministic_rejects_nondeterministic(fig2: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        run_deterministic(fig2, parse_word('a:1'))


def test_run_deterministic_agrees_with_accepts(fig1: Safa,
                                               fig6: Safa) -> None:
    for a in (fig1, fig6):
        for w in words(a, [1, 2], 3):
            assert run_deterministic(a, w)[0] == accepts(a, w)


@settings(max_examples=200, deadline=None)
@given(integers(0, SEED_MAX))
def test_accepts_matches_brute_force(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = random_safa(rng)
    for _ in range(5):
        w = random_word(rng, a.alphabet, max_length=5)
        assert accepts(a, w) == brute_force_accepts(a, w)


@settings(max_examples=200, deadline=None)
@given(integers(0, SEED_MAX))
def test_acceptance_is_invariant_under_renaming(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = random_safa(rng)
    w = random_word(rng, a.alphabet, max_length=6, max_datum=4)
    renamed = rename_data(w, random_injection(rng, w.data()))
    assert accepts(a, w) == accepts(a, renamed)


def test_pump_decomposition(fig1: Safa) -> None:
    run, start, stop = pump_decomposition(fig1, parse_word('a:1 a:2'))
    assert (start, stop) == (0, 1)
    assert run.states() == ('q0', 'q0', 'q0')


def test_pump_inserts_fresh_data(fig1: Safa) -> None:
    pumped = pump(fig1, parse_word('a:1 a:2'), 1)
    assert [str(w) for w in pumped] == ['a:1 a:3 a:2']


def test_pump_keeps_member_guards_satisfied(fig3: Safa) -> None:
    pumped = pump(fig3, parse_word('a:1 a:1'), 2)
    assert [str(w) for w in pumped] == ['a:1 a:2 a:1', 'a:1 a:2 a:3 a:1']


def test_pump_rejects_short_word(fig5: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        pump(fig5, parse_word('a:1 a:1'), 1)


def test_pump_rejects_rejected_word(fig1: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        pump(fig1, parse_word('a:1 a:1'), 1)


def test_pump_rejects_non_positive_ell(fig1: Safa) -> None:
    with pytest.raises(InvalidArgumentError):
        pump(fig1, parse_word('a:1 a:2'), 0)


@settings(max_examples=100, deadline=None)
@given(integers(0, SEED_MAX))
def test_pumped_words_are_accepted(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = random_safa(rng, max_states=3)
    accepted = [w for w in (random_word(rng, a.alphabet, max_length=6)
                            for _ in range(20))
                if (len(w) >= len(a.states)) and accepts(a, w)]
    for w in accepted[:2]:
        pumped = pump(a, w, 2)
        assert len(pumped) == 2
        assert len(pumped[0]) < len(pumped[1])
        assert all(brute_force_accepts(a, v) for v in pumped)


@pytest.mark.parametrize('name', ['fig1', 'fig2', 'fig3', 'fig6'])
def test_pumping_loop_bearing_fixtures(name: str,
                                       request: pytest.FixtureRequest) \
        -> None:
    a: Safa = request.getfixturevalue(name)
    candidates = enumerate_words(a.alphabet, [1, 2, 3, 4],
                                 len(a.states) + 3)
    accepted = list(islice((w for w in candidates
                            if (len(w) >= len(a.states)) and accepts(a, w)),
                           100))
    assert len(accepted) == 100
    for w in accepted:
        pumped = pump(a, w, 3)
        assert len(pumped) == 3
        assert all(accepts(a, v) for v in pumped)


@settings(max_examples=200, deadline=None)
@given(integers(0, SEED_MAX))
def test_sets_only_grow_along_a_run(seed: int) -> None:
    rng = np.random.default_rng(seed)
    a = random_safa(rng)
    for _ in range(5):
        run = find_accepting_run(a, random_word(rng, a.alphabet,
                                                max_length=6))
        if run is None:
            continue
        for before, after in zip(run.configs, run.configs[1:]):
            assert all(old <= new
                       for old, new in zip(before.sets, after.sets))
