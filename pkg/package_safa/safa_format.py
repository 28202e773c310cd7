"""A Python module to read and write the plain-text formats: automata of the
four kinds (safa, register, cca, nfa), data words and DIMACS CNF formulas.

Notes
-----
An automaton file starts with its kind, then holds one `key: values` entry
per line; `#` starts a comment. For example,

    safa
    states: q0 q1
    alphabet: a b
    sets: 1
    initial: q0
    final: q0
    trans: q0 a !p1 ins1 q0

A word is written as space-separated `letter:datum` tokens, the empty string
being the empty word.
"""

import re

from package_safa.common_errors import ParseError
from package_safa.common_types import Final, Item, NoReturn
from package_safa.comparison_models import (BagOp, Cca, CcaTransition,
                                            Comparator, Constraint,
                                            RegisterAutomaton)
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (NO_OP, DataWord, Polarity, Predicate, Safa,
                                    SetOp, Transition)
from package_safa.safa_reductions import CnfFormula
from package_safa.utils_name import create_function_name_logger
from package_safa.utils_nfa import Nfa

type Automaton = Safa | RegisterAutomaton | Cca | Nfa
type Token = tuple[str, int]

KINDS: Final[tuple[str, ...]] = ('safa', 'register', 'cca', 'nfa')

__pattern_token: Final[re.Pattern[str]] = re.compile(r'\S+')
__pattern_guard: Final[re.Pattern[str]] = re.compile(r'^(!?)p([0-9]+)$')
__pattern_op: Final[re.Pattern[str]] = re.compile(r'^(?:-|ins([0-9]+))$')
__pattern_constraint: Final[re.Pattern[str]] = \
    re.compile(r'^(<=|>=|!=|<|>|=)([0-9]+)$')
__pattern_bag_op: Final[re.Pattern[str]] = re.compile(r'^([+=])([0-9]+)$')
__pattern_item: Final[re.Pattern[str]] = re.compile(r'^(\S+):(\S*)$')
__pattern_natural: Final[re.Pattern[str]] = re.compile(r'[0-9]+')

REQUIRED_KEYS: Final[dict[str, tuple[str, ...]]] = {
    'safa': ('states', 'alphabet', 'sets', 'initial', 'final'),
    'register': ('states', 'alphabet', 'registers', 'initial', 'final'),
    'cca': ('states', 'alphabet', 'bags', 'initial', 'final'),
    'nfa': ('states', 'alphabet', 'initial', 'final'),
}
REPEATED_KEYS: Final[dict[str, tuple[str, ...]]] = {
    'safa': ('trans',),
    'register': ('trans', 'update'),
    'cca': ('trans',),
    'nfa': ('trans',),
}


def _fail(message: str,
          line: int,
          column: int = 0) -> NoReturn:

    logger: DefaultLogger = create_function_name_logger()
    logger.error(f'line {line}, column {column}: {message}',
                 ParseError(message, line=line, column=column))


def _tokens(text: str,
            offset: int) -> list[Token]:
    """Split on whitespace, keeping 1-based columns."""

    return [(match.group(), match.start() + offset + 1)
            for match in __pattern_token.finditer(text)]


def _natural(token: Token,
             line: int,
             what: str) -> int:

    if __pattern_natural.fullmatch(token[0]) is None:
        _fail(f'{what} must be a natural number, got {token[0]!r}',
              line, token[1])
    return int(token[0])


def _expect(tokens: list[Token],
            count: int,
            line: int,
            key: str) -> None:

    if len(tokens) != count:
        _fail(f'{key}: expected {count} fields, got {len(tokens)}', line)


class _Entries:
    """The `key: values` lines of an automaton file, grouped by key."""

    def __init__(self,
                 kind: str,
                 lines: list[tuple[int, str]],
                 last_line: int) -> None:

        self.kind: str = kind
        self.last_line: int = last_line
        self.single: dict[str, tuple[int, list[Token]]] = {}
        self.multiple: dict[str, list[tuple[int, list[Token]]]] = \
            {key: [] for key in REPEATED_KEYS[kind]}

        for number, content in lines:
            key, separator, rest = content.partition(':')
            key = key.strip()
            if not separator:
                _fail(f'expected "key: values", got {content.strip()!r}',
                      number, 1)
            values: list[Token] = _tokens(rest, content.index(':') + 1)
            if key in self.multiple:
                self.multiple[key].append((number, values))
            elif key in REQUIRED_KEYS[kind]:
                if key in self.single:
                    _fail(f'duplicate {key!r} line', number, 1)
                self.single[key] = (number, values)
            else:
                _fail(f'unknown key {key!r} for kind {kind!r}', number, 1)

        for key in REQUIRED_KEYS[kind]:
            if key not in self.single:
                _fail(f'missing \'{key}:\' line', last_line)

    def values(self,
               key: str) -> list[str]:
        """Return the values of a single line, without columns."""

        return [value for value, _ in self.single[key][1]]

    def one(self,
            key: str) -> str:
        """Return the only value of a single line."""

        number, values = self.single[key]
        _expect(values, 1, number, key)
        return values[0][0]

    def natural(self,
                key: str) -> int:
        """Return the first value of a single line as a natural number."""

        number, values = self.single[key]
        if not values:
            _fail(f'{key}: missing count', number)
        return _natural(values[0], number, key)


def _split_lines(text: str) -> tuple[str, list[tuple[int, str]], int]:

    kind: str | None = None
    lines: list[tuple[int, str]] = []
    number: int = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        content: str = raw.split('#', 1)[0].rstrip()
        if not content.strip():
            continue
        if kind is None:
            kind = content.strip()
            if kind not in KINDS:
                _fail(f'unknown kind {kind!r}, expected one of '
                      + ', '.join(KINDS), number, 1)
            continue
        lines.append((number, content))

    if kind is None:
        _fail('missing kind header', max(number, 1))
    return kind, lines, number + 1


def parse_automaton(text: str) -> Automaton:
    """Parse an automaton of any kind.

    Parameters
    ----------
    text : str
        The file contents.

    Returns
    -------
    Safa | RegisterAutomaton | Cca | Nfa
        The automaton, as written; it is not validated.

    Raises
    ------
    ParseError
        On a syntax error, with its line and column.

    Examples
    --------
    >>> from package_safa.safa_format import parse_automaton
    >>> a = parse_automaton('safa\\nstates: q0\\nalphabet: a\\nsets: 1\\n'
    ...     'initial: q0\\nfinal: q0\\ntrans: q0 a !p1 ins1 q0\\n')
    >>> str(a.transitions[0])
    'q0 a !p1 ins1 q0'
    """

    kind, lines, last_line = _split_lines(text)
    entries: _Entries = _Entries(kind, lines, last_line)

    match kind:
        case 'safa':
            return _build_safa(entries)
        case 'register':
            return _build_register(entries)
        case 'cca':
            return _build_cca(entries)
        case _:
            return _build_nfa(entries)


def _guard(token: Token,
           line: int) -> Predicate:

    match: re.Match[str] | None = __pattern_guard.match(token[0])
    if match is None:
        _fail(f'malformed guard {token[0]!r}', line, token[1])
    polarity: Polarity = Polarity.NOT_MEMBER if match.group(1) \
        else Polarity.MEMBER
    return Predicate(polarity, int(match.group(2)))


def _op(token: Token,
        line: int) -> SetOp:

    match: re.Match[str] | None = __pattern_op.match(token[0])
    if match is None:
        _fail(f'malformed set operation {token[0]!r}', line, token[1])
    return NO_OP if match.group(1) is None else SetOp.insert(
        int(match.group(1)))


def _build_safa(entries: _Entries) -> Safa:

    transitions: list[Transition] = []
    for number, values in entries.multiple['trans']:
        _expect(values, 5, number, 'trans')
        transitions.append(Transition(values[0][0], values[1][0],
                                      _guard(values[2], number),
                                      _op(values[3], number), values[4][0]))

    return Safa(states=tuple(entries.values('states')),
                alphabet=tuple(entries.values('alphabet')),
                set_count=entries.natural('sets'),
                initial=entries.one('initial'),
                finals=frozenset(entries.values('final')),
                transitions=tuple(transitions))


def _build_register(entries: _Entries) -> RegisterAutomaton:

    number, values = entries.single['registers']
    count: int = entries.natural('registers')
    if (len(values) < 2) or (values[1][0] != 'init:'):
        _fail("registers: expected '<k> init: <v|_> ...'", number)
    if len(values) - 2 != count:
        _fail(f'registers: {len(values) - 2} initial values for {count} '
              + 'registers', number)
    initial_registers: tuple[int | None, ...] = tuple(
        None if token[0] == '_' else _natural(token, number, 'register value')
        for token in values[2:])

    update: list[tuple[str, str, int]] = []
    for line, tokens in entries.multiple['update']:
        _expect(tokens, 3, line, 'update')
        update.append((tokens[0][0], tokens[1][0],
                       _natural(tokens[2], line, 'register')))

    transitions: list[tuple[str, str, int, str]] = []
    for line, tokens in entries.multiple['trans']:
        _expect(tokens, 4, line, 'trans')
        transitions.append((tokens[0][0], tokens[1][0],
                            _natural(tokens[2], line, 'register'),
                            tokens[3][0]))

    return RegisterAutomaton(states=tuple(entries.values('states')),
                             alphabet=tuple(entries.values('alphabet')),
                             register_count=count,
                             initial_registers=initial_registers,
                             update=tuple(update),
                             initial=entries.one('initial'),
                             finals=frozenset(entries.values('final')),
                             transitions=tuple(transitions))


def _bracketed(token: Token,
               line: int) -> list[Token]:

    text, column = token
    if (len(text) < 2) or (text[0] != '[') or (text[-1] != ']'):
        _fail(f'expected a bracketed list, got {text!r}', line, column)
    if text == '[]':
        return []

    parts: list[Token] = []
    position: int = column + 1
    for part in text[1:-1].split(';'):
        parts.append((part, position))
        position += len(part) + 1
    return parts


def _build_cca(entries: _Entries) -> Cca:

    transitions: list[CcaTransition] = []
    for line, tokens in entries.multiple['trans']:
        _expect(tokens, 5, line, 'trans')

        constraints: list[Constraint] = []
        for text, column in _bracketed(tokens[2], line):
            match: re.Match[str] | None = __pattern_constraint.match(text)
            if match is None:
                _fail(f'malformed constraint {text!r}', line, column)
            constraints.append(Constraint(Comparator(match.group(1)),
                                          int(match.group(2))))

        operations: list[BagOp] = []
        for text, column in _bracketed(tokens[3], line):
            match = __pattern_bag_op.match(text)
            if match is None:
                _fail(f'malformed bag operation {text!r}', line, column)
            operations.append(BagOp(match.group(1) == '=',
                                    int(match.group(2))))

        transitions.append(CcaTransition(tokens[0][0], tokens[1][0],
                                         tuple(constraints),
                                         tuple(operations), tokens[4][0]))

    return Cca(states=tuple(entries.values('states')),
               alphabet=tuple(entries.values('alphabet')),
               bag_count=entries.natural('bags'),
               initial=entries.one('initial'),
               finals=frozenset(entries.values('final')),
               transitions=tuple(transitions))


def _build_nfa(entries: _Entries) -> Nfa:

    transitions: list[tuple[str, str, str]] = []
    for line, tokens in entries.multiple['trans']:
        _expect(tokens, 3, line, 'trans')
        transitions.append((tokens[0][0], tokens[1][0], tokens[2][0]))

    return Nfa(states=tuple(entries.values('states')),
               alphabet=tuple(entries.values('alphabet')),
               initial=entries.one('initial'),
               finals=frozenset(entries.values('final')),
               transitions=tuple(transitions))


def _header(kind: str,
            states: tuple[str, ...],
            alphabet: tuple[str, ...]) -> list[str]:
    return [kind, 'states: ' + ' '.join(states),
            'alphabet: ' + ' '.join(alphabet)]


def _tail(states: tuple[str, ...],
          initial: str,
          finals: frozenset[str]) -> list[str]:

    ordered: list[str] = [state for state in states if state in finals] \
        + sorted(finals - set(states))
    return [f'initial: {initial}', 'final: ' + ' '.join(ordered)]


def print_automaton(x: Automaton) -> str:
    """Print an automaton in canonical form.

    Parameters
    ----------
    x : Safa | RegisterAutomaton | Cca | Nfa
        The automaton.

    Returns
    -------
    str
        The text, ending with a newline; `parse_automaton` gives `x` back.
    """

    lines: list[str]
    match x:
        case Safa():
            lines = _header('safa', x.states, x.alphabet) \
                + [f'sets: {x.set_count}'] \
                + _tail(x.states, x.initial, x.finals) \
                + [f'trans: {transition}' for transition in x.transitions]
        case RegisterAutomaton():
            registers: str = ' '.join(
                '_' if value is None else str(value)
                for value in x.initial_registers)
            lines = _header('register', x.states, x.alphabet) \
                + [f'registers: {x.register_count} init: {registers}'
                   .rstrip()] \
                + _tail(x.states, x.initial, x.finals) \
                + [f'update: {state} {letter} {register}'
                   for state, letter, register in x.update] \
                + [f'trans: {source} {letter} {register} {target}'
                   for source, letter, register, target in x.transitions]
        case Cca():
            lines = _header('cca', x.states, x.alphabet) \
                + [f'bags: {x.bag_count}'] \
                + _tail(x.states, x.initial, x.finals)
            for transition in x.transitions:
                constraints: str = ';'.join(
                    str(constraint) for constraint in transition.constraints)
                operations: str = ';'.join(
                    str(bag_op) for bag_op in transition.operations)
                lines.append(f'trans: {transition.source} '
                             + f'{transition.letter} [{constraints}] '
                             + f'[{operations}] {transition.target}')
        case _:
            lines = _header('nfa', x.states, x.alphabet) \
                + _tail(x.states, x.initial, x.finals) \
                + [f'trans: {source} {letter} {target}'
                   for source, letter, target in x.transitions]

    return '\n'.join(line.rstrip() for line in lines) + '\n'


def parse_word(text: str,
               line: int = 1) -> DataWord:
    """Parse a data word.

    Parameters
    ----------
    text : str
        Space-separated `letter:datum` tokens; blank text is the empty word.
    line : int, optional, default 1
        The line number reported in errors.

    Returns
    -------
    DataWord
        The word.

    Raises
    ------
    ParseError
        If a token is malformed or a datum is not a natural number.

    Examples
    --------
    >>> from package_safa.safa_format import parse_word
    >>> parse_word('a:1 b:42').items
    (('a', 1), ('b', 42))
    """

    items: list[Item] = []
    for token, column in _tokens(text, 0):
        match: re.Match[str] | None = __pattern_item.match(token)
        if match is None:
            _fail(f"malformed item {token!r}, expected 'letter:datum'",
                  line, column)
        datum: str = match.group(2)
        if __pattern_natural.fullmatch(datum) is None:
            _fail(f'datum must be a natural number, got {datum!r}', line,
                  column + len(match.group(1)) + 1)
        items.append((match.group(1), int(datum)))

    return DataWord(tuple(items))


def parse_words(text: str) -> list[DataWord]:
    """Parse one word per line; `#` comment lines are skipped and blank lines
    stand for the empty word."""

    words: list[DataWord] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith('#'):
            continue
        words.append(parse_word(raw, number))
    return words


def print_word(w: DataWord) -> str:
    """Print a word as space-separated `letter:datum` tokens."""

    return str(w)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse a CNF formula in DIMACS format.

    Parameters
    ----------
    text : str
        The file contents: `c` comment lines, a `p cnf <vars> <clauses>`
        line, then clauses as integers terminated by 0.

    Returns
    -------
    CnfFormula
        The formula.

    Raises
    ------
    ParseError
        On a malformed problem line or literal, an empty clause, or a clause
        count differing from the problem line.

    Examples
    --------
    >>> from package_safa.safa_format import parse_dimacs
    >>> parse_dimacs('p cnf 2 1\\n1 -2 0\\n').clauses
    ((1, -2),)
    """

    declared: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    number: int = 0
    fields: list[Token]

    for number, raw in enumerate(text.splitlines(), start=1):
        stripped: str = raw.strip()
        if (not stripped) or stripped.startswith('c'):
            continue
        if stripped.startswith('%'):
            break
        if stripped.startswith('p'):
            fields = _tokens(raw, 0)
            if (declared is not None) or (len(fields) != 4) \
                    or (fields[1][0] != 'cnf'):
                _fail("expected a single 'p cnf <vars> <clauses>' line",
                      number, 1)
            declared = (_natural(fields[2], number, 'variable count'),
                        _natural(fields[3], number, 'clause count'))
            continue
        if declared is None:
            _fail("clause before the 'p cnf' line", number, 1)

        for token, column in _tokens(raw, 0):
            try:
                literal: int = int(token)
            except ValueError:
                _fail(f'malformed literal {token!r}', number, column)
            if literal == 0:
                if not current:
                    _fail('empty clause', number, column)
                clauses.append(tuple(current))
                current = []
            elif abs(literal) > declared[0]:
                _fail(f'literal {literal} exceeds the {declared[0]} '
                      + 'declared variables', number, column)
            else:
                current.append(literal)

    if declared is None:
        _fail("missing 'p cnf' line", max(number, 1))
    if current:
        clauses.append(tuple(current))
    if len(clauses) != declared[1]:
        _fail(f'{len(clauses)} clauses, {declared[1]} declared', number)

    return CnfFormula(declared[0], tuple(clauses))
