"""Reference procedures and small automata shared by the tests."""

from graphlib import CycleError, TopologicalSorter

from package_safa.common_types import Final, Sequence
from package_safa.safa_core import Configuration, DataWord, Safa, make_safa
from package_safa.safa_semantics import accepts, step
from package_safa.utils_sampling import enumerate_words

SEED_MAX: Final[int] = 2**32 - 1


def brute_force_accepts(a: Safa,
                        w: DataWord) -> bool:
    """Follow every run separately, without merging configurations."""

    configs: list[Configuration] = [Configuration.initial(a)]
    for item in w:
        configs = [successor for config in configs
                   for _, successor in step(a, config, item)]
    return any(config.state in a.finals for config in configs)


def split_accepts(a: Safa,
                  b: Safa,
                  w: DataWord) -> bool:
    """Return whether w = uv with u in L(a) and v in L(b)."""

    return any(accepts(a, w.slice(0, cut)) and accepts(b, w.slice(cut))
               for cut in range(len(w) + 1))


def words(a: Safa,
          data: Sequence[int],
          max_length: int) -> list[DataWord]:
    """Return every word over the alphabet of `a`."""

    return list(enumerate_words(a.alphabet, data, max_length))


def accept_all() -> Safa:
    """Return the total one-state automaton accepting everything over 'a'."""

    return make_safa(['q0'], ['a'], 1, 'q0', ['q0'],
                     [('q0', 'a', '!p1', '-', 'q0'),
                      ('q0', 'a', 'p1', '-', 'q0')])


def epsilon_only(alphabet: Sequence[str]) -> Safa:
    """Return the automaton accepting exactly the empty word."""

    return make_safa(['e'], alphabet, 1, 'e', ['e'], [])


def has_cycle(a: Safa) -> bool:
    """Return whether the transition graph of `a` has a cycle."""

    graph: dict[str, set[str]] = {state: set() for state in a.states}
    for transition in a.transitions:
        graph[transition.target].add(transition.source)
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return True
    return False
