# -*- coding: utf-8 -*-
"""Nondeterministic Büchi automata: the data model, the NBA v1 exchange
format, ultimately periodic words, products, emptiness and generators."""
# ==============================================================================
# Imports
# ==============================================================================
import re
import math
import random
import logging
import string
from collections import deque
from dataclasses import dataclass, field, replace

import networkx as nx


# ==============================================================================
# Globals
# ==============================================================================
LOG = logging.getLogger(__name__)

token_regex = re.compile(r'^[A-Za-z0-9_]+$')

HEADER_KEYS = ('alphabet', 'states', 'initial', 'accepting')


# ==============================================================================
# Exceptions
# ==============================================================================
class NbaFormatError(ValueError):
    """An NBA v1 document or a word could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = 'line {}: {}'.format(lineno, message)
        super(NbaFormatError, self).__init__(message)


class AlphabetMismatchError(ValueError):
    """Two automata were combined over different alphabets."""


# ==============================================================================
# Classes
# ==============================================================================
@dataclass(frozen=True)
class Alphabet(object):
    """An ordered set of letter tokens; letters are addressed by index."""

    letters: tuple
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise ValueError("An alphabet needs at least one letter")
        for token in letters:
            if not token_regex.match(token):
                raise ValueError("Invalid letter token '{}'".format(token))
        if len(set(letters)) != len(letters):
            raise ValueError("Duplicate letter tokens in {}".format(letters))

        object.__setattr__(self, 'letters', letters)
        object.__setattr__(self, '_index',
                           {token: pos for pos, token in enumerate(letters)})

    def __len__(self):
        return len(self.letters)

    @property
    def index(self):
        """dict of {str: int}: Position of every token."""
        return dict(self._index)

    def lookup(self, token):
        """Return the index of a token or None when it is not a letter."""
        return self._index.get(token)

    @property
    def single_char(self):
        """bool: Every letter is a single character (compact words)."""
        return all(len(token) == 1 for token in self.letters)


@dataclass(frozen=True)
class UPWord(object):
    """The ultimately periodic word stem·period^ω over letter indices."""

    stem: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, 'stem', tuple(self.stem))
        object.__setattr__(self, 'period', tuple(self.period))
        if not self.period:
            raise ValueError("The period of a word must be nonempty")

    def __len__(self):
        return len(self.stem) + len(self.period)

    def letter_at(self, position):
        """Return the letter read at an absolute position of the word."""
        if position < len(self.stem):
            return self.stem[position]
        return self.period[(position - len(self.stem)) % len(self.period)]

    def unroll(self):
        """Return the same word written as stem·period (period)."""
        return UPWord(self.stem + self.period, self.period)

    def double(self):
        """Return the same word written as stem (period·period)."""
        return UPWord(self.stem, self.period + self.period)


@dataclass(frozen=True)
class Nba(object):
    """A nondeterministic Büchi automaton over the states 0..n-1.

    'trans' holds the transition map as sorted ((state, letter), targets)
    entries; absent entries mean the empty successor set.
    """

    alphabet: Alphabet
    n: int
    initial: frozenset
    accepting: frozenset
    trans: tuple = ()
    _table: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("An automaton needs at least one state")

        initial = frozenset(self.initial)
        accepting = frozenset(self.accepting)
        if not initial:
            raise ValueError("empty initial set")
        for q in initial | accepting:
            self._check_state(q)

        table = {}
        entries = self.trans.items() if isinstance(self.trans, dict) \
            else self.trans
        for (q, letter), targets in entries:
            self._check_state(q)
            if not 0 <= letter < len(self.alphabet):
                raise ValueError("Letter index {} out of range".format(letter))
            for target in targets:
                self._check_state(target)
            if targets:
                table.setdefault((q, letter), set()).update(targets)

        object.__setattr__(self, 'initial', initial)
        object.__setattr__(self, 'accepting', accepting)
        object.__setattr__(self, 'trans', tuple(
            (key, frozenset(table[key])) for key in sorted(table)))
        object.__setattr__(self, '_table', dict(self.trans))

    def _check_state(self, q):
        if not 0 <= q < self.n:
            raise ValueError("state index out of range: {}".format(q))

    @classmethod
    def build(cls, alphabet, n, initial, accepting, edges=()):
        """Create an automaton from (source, letter, target) triples.

        Args:
            alphabet (Alphabet): The input alphabet.
            n (int): Number of states.
            initial (iterable of int): Initial states.
            accepting (iterable of int): Accepting states.
            edges (iterable of tuple): (source, letter index, target) triples.

        Returns:
            Nba: The automaton.
        """

        table = {}
        for src, letter, dst in edges:
            table.setdefault((src, letter), set()).add(dst)

        return cls(alphabet, n, initial, accepting, table)

    @property
    def states(self):
        """range: All states of the automaton."""
        return range(self.n)

    def post(self, q, letter):
        """Return δ(q, letter) as a frozenset."""
        return self._table.get((q, letter), frozenset())

    def transitions(self):
        """Yield (source, letter, target) triples in canonical order."""
        for (q, letter), targets in self.trans:
            for target in sorted(targets):
                yield q, letter, target


# ==============================================================================
# Format
# ==============================================================================
def _parse_state(token, n, lineno):
    try:
        q = int(token)
    except ValueError:
        raise NbaFormatError("invalid state '{}'".format(token), lineno)
    if not 0 <= q < n:
        raise NbaFormatError("state index out of range: {}".format(q), lineno)

    return q


def parse_nba(text):
    """Parse an NBA v1 document.

    Args:
        text (str): The document. Lines starting with '#' and blank lines are
            ignored.

    Returns:
        Nba: The described automaton.

    Raises:
        NbaFormatError: The document is malformed; the message carries the
            offending line number.
    """

    lines = [(lineno, line.strip())
             for lineno, line in enumerate(text.splitlines(), 1)
             if line.strip() and not line.strip().startswith('#')]

    if not lines or lines[0][1] != 'nba':
        raise NbaFormatError("expected 'nba' header",
                             lines[0][0] if lines else 1)

    header = {}
    for pos, key in enumerate(HEADER_KEYS, 1):
        if pos >= len(lines):
            raise NbaFormatError("missing '{}:' line".format(key),
                                 lines[-1][0] + 1)
        lineno, line = lines[pos]
        name, sep, rest = line.partition(':')
        if not sep or name.strip() != key:
            raise NbaFormatError("expected '{}:'".format(key), lineno)
        header[key] = (lineno, rest.split())

    lineno, tokens = header['alphabet']
    try:
        alphabet = Alphabet(tokens)
    except ValueError as error:
        raise NbaFormatError(str(error), lineno)

    lineno, tokens = header['states']
    if len(tokens) != 1 or not tokens[0].isdecimal() or int(tokens[0]) < 1:
        raise NbaFormatError("expected a positive state count", lineno)
    n = int(tokens[0])

    lineno, tokens = header['initial']
    if not tokens:
        raise NbaFormatError("empty initial set", lineno)
    initial = [_parse_state(token, n, lineno) for token in tokens]

    lineno, tokens = header['accepting']
    accepting = [_parse_state(token, n, lineno) for token in tokens]

    edges = []
    for lineno, line in lines[len(HEADER_KEYS) + 1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise NbaFormatError("expected '<src> <letter> <dst>'", lineno)
        letter = alphabet.lookup(tokens[1])
        if letter is None:
            raise NbaFormatError("unknown letter '{}'".format(tokens[1]),
                                 lineno)
        edges.append((_parse_state(tokens[0], n, lineno),
                      letter,
                      _parse_state(tokens[2], n, lineno)))

    return Nba.build(alphabet, n, initial, accepting, edges)


def serialize_nba(a):
    """Render an automaton as a canonical NBA v1 document.

    Args:
        a (Nba): The automaton.

    Returns:
        str: The document, LF terminated, transitions sorted by (source,
            letter index, target).
    """

    def _line(key, values):
        return ' '.join(['{}:'.format(key)] + [str(v) for v in values])

    lines = ['nba',
             _line('alphabet', a.alphabet.letters),
             _line('states', [a.n]),
             _line('initial', sorted(a.initial)),
             _line('accepting', sorted(a.accepting))]
    lines.extend('{} {} {}'.format(q, a.alphabet.letters[letter], target)
                 for q, letter, target in a.transitions())

    return '\n'.join(lines) + '\n'


def _split_tokens(chunk, alphabet):
    tokens = []
    for part in chunk.split():
        letter = alphabet.lookup(part)
        if letter is not None:
            tokens.append(letter)
        elif alphabet.single_char:
            for char in part:
                letter = alphabet.lookup(char)
                if letter is None:
                    raise NbaFormatError("unknown letter '{}'".format(char))
                tokens.append(letter)
        else:
            raise NbaFormatError("unknown letter '{}'".format(part))

    return tuple(tokens)


def parse_word(text, alphabet):
    """Parse 'stem ( period )' (or compact 'ab(ba)') into a word.

    Args:
        text (str): The word.
        alphabet (Alphabet): The alphabet the tokens are drawn from.

    Returns:
        UPWord: The parsed word.

    Raises:
        NbaFormatError: Unbalanced parentheses, empty period, or an unknown
            letter.
    """

    if text.count('(') != 1 or text.count(')') != 1:
        raise NbaFormatError("a word needs exactly one '( period )' group")
    stem, _, rest = text.partition('(')
    period, _, tail = rest.partition(')')
    if tail.strip():
        raise NbaFormatError("unexpected text after the period")

    period = _split_tokens(period, alphabet)
    if not period:
        raise NbaFormatError("empty period")

    return UPWord(_split_tokens(stem, alphabet), period)


def format_word(w, alphabet):
    """Render a word in the syntax accepted by parse_word.

    Args:
        w (UPWord): The word.
        alphabet (Alphabet): Its alphabet.

    Returns:
        str: Compact form for single-character alphabets, spaced otherwise.
    """

    stem = [alphabet.letters[letter] for letter in w.stem]
    period = [alphabet.letters[letter] for letter in w.period]
    if alphabet.single_char:
        return '{}({})'.format(''.join(stem), ''.join(period))

    return ' '.join(stem + ['('] + period + [')'])


def to_dot(a):
    """Render an automaton as a graphviz document.

    Accepting states get a double border; every initial state gets an entry
    arrow from an invisible point node.

    Args:
        a (Nba): The automaton.

    Returns:
        str: The DOT text, byte-stable for a given automaton.
    """

    return ''.join(_dot_lines(a))


def _dot_lines(a):
    yield 'digraph nba {\n'
    yield '  rankdir=LR;\n'
    for q in sorted(a.initial):
        yield '  init{} [shape=point];\n'.format(q)
    for q in a.states:
        shape = 'doublecircle' if q in a.accepting else 'circle'
        yield '  {} [shape={}];\n'.format(q, shape)
    for q in sorted(a.initial):
        yield '  init{0} -> {0};\n'.format(q)
    for q, letter, target in a.transitions():
        yield '  {} -> {} [label="{}"];\n'.format(
            q, target, a.alphabet.letters[letter])
    yield '}\n'


# ==============================================================================
# Semantics
# ==============================================================================
def successors(a, states, letter):
    """Return δ(S, σ), the union of δ(q, σ) over q in S.

    Args:
        a (Nba): The automaton.
        states (iterable of int): The set S.
        letter (int): The letter index σ.

    Returns:
        frozenset: The successor set.
    """

    result = set()
    for q in states:
        result.update(a.post(q, letter))

    return frozenset(result)


def reachable_states(a):
    """Return the states reachable from the initial set."""

    seen = set(a.initial)
    queue = deque(sorted(a.initial))
    while queue:
        q = queue.popleft()
        for letter in range(len(a.alphabet)):
            for target in sorted(a.post(q, letter)):
                if target not in seen:
                    seen.add(target)
                    queue.append(target)

    return frozenset(seen)


def transition_count(a):
    """Return Σ |δ(q, σ)| over all states and letters."""
    return sum(len(targets) for _, targets in a.trans)


def size(a):
    """Return the size measure Σ (1 + |δ(q, σ)|) over all states and letters.
    """
    return a.n * len(a.alphabet) + transition_count(a)


def has_accepting_cycle(graph, is_accepting):
    """Test whether some cycle of a graph passes through an accepting node.

    Args:
        graph (networkx.DiGraph): The graph, already restricted to the nodes
            of interest (e.g. the reachable ones).
        is_accepting (callable): Predicate on nodes.

    Returns:
        bool: True if a nontrivial strongly connected component (or a node
            with a self-loop) contains an accepting node.
    """

    for component in nx.strongly_connected_components(graph):
        if len(component) == 1:
            node = next(iter(component))
            if not graph.has_edge(node, node):
                continue
        if any(is_accepting(node) for node in component):
            return True

    return False


def _reachable_graph(roots, step):
    graph = nx.DiGraph()
    queue = deque(roots)
    graph.add_nodes_from(roots)
    while queue:
        node = queue.popleft()
        for target in step(node):
            if target not in graph:
                graph.add_node(target)
                queue.append(target)
            graph.add_edge(node, target)

    return graph


def membership(a, w):
    """Decide whether an automaton accepts an ultimately periodic word.

    The lasso product pairs states with word positions; the position after
    the last period letter wraps back to the start of the period.

    Args:
        a (Nba): The automaton.
        w (UPWord): The word, over a's alphabet.

    Returns:
        bool: True iff some run visits accepting states infinitely often.
    """

    length = len(w)
    wrap = len(w.stem)
    letters = w.stem + w.period

    def _step(node):
        q, pos = node
        nxt = pos + 1 if pos + 1 < length else wrap
        return [(target, nxt) for target in sorted(a.post(q, letters[pos]))]

    graph = _reachable_graph([(q, 0) for q in sorted(a.initial)], _step)

    return has_accepting_cycle(graph, lambda node: node[0] in a.accepting)


def is_empty(a):
    """Decide whether the language of an automaton is empty.

    Args:
        a (Nba): The automaton.

    Returns:
        bool: True iff no reachable cycle contains an accepting state.
    """

    graph = nx.DiGraph()
    graph.add_nodes_from(reachable_states(a))
    graph.add_edges_from((q, target) for q, _, target in a.transitions()
                         if q in graph)

    return not has_accepting_cycle(graph, lambda q: q in a.accepting)


def intersect(a, b):
    """Build the two-copy Büchi product of two automata.

    A product state (p, q, k) switches from copy 1 to copy 2 when p is
    accepting in 'a', and back when q is accepting in 'b'; it is accepting
    when it is in copy 1 on an accepting state of 'a'.

    Args:
        a (Nba): First automaton.
        b (Nba): Second automaton over the same alphabet.

    Returns:
        Nba: The reachable product; L = L(a) ∩ L(b).

    Raises:
        AlphabetMismatchError: The alphabets differ.
    """

    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            "Alphabets differ: {} vs {}".format(a.alphabet.letters,
                                                b.alphabet.letters))

    roots = [(p, q, 1) for p in sorted(a.initial) for q in sorted(b.initial)]
    index = {root: pos for pos, root in enumerate(roots)}
    queue = deque(roots)
    edges = []
    while queue:
        node = queue.popleft()
        p, q, copy = node
        if copy == 1 and p in a.accepting:
            copy = 2
        elif copy == 2 and q in b.accepting:
            copy = 1
        for letter in range(len(a.alphabet)):
            for p2 in sorted(a.post(p, letter)):
                for q2 in sorted(b.post(q, letter)):
                    target = (p2, q2, copy)
                    if target not in index:
                        index[target] = len(index)
                        queue.append(target)
                    edges.append((index[node], letter, index[target]))

    accepting = [pos for (p, _, copy), pos in index.items()
                 if copy == 1 and p in a.accepting]
    LOG.debug("Product of %d and %d states has %d states",
              a.n, b.n, len(index))

    return Nba.build(a.alphabet, len(index), range(len(roots)), accepting,
                     edges)


# ==============================================================================
# Builders and mutators
# ==============================================================================
def letters_for(k):
    """Return the default alphabet with k letters ('a', 'b', ...)."""

    if k <= len(string.ascii_lowercase):
        return Alphabet(string.ascii_lowercase[:k])

    return Alphabet(['l{}'.format(pos) for pos in range(k)])


def random_nba(n, k, d, fa, seed):
    """Generate a seeded random automaton.

    Each (state, letter, target) triple is an edge independently with
    probability min(1, d/n); state 0 is initial; ⌈fa·n⌉ accepting states are
    sampled afterwards from the same generator.

    Args:
        n (int): Number of states.
        k (int): Alphabet size.
        d (float): Expected outdegree per letter.
        fa (float): Fraction of accepting states.
        seed (int): Seed of the generator.

    Returns:
        Nba: The automaton, identical for identical arguments.

    Raises:
        ValueError: Parameters out of range.
    """

    if n < 1 or k < 1 or d <= 0 or not 0 <= fa <= 1:
        raise ValueError("Invalid generator parameters: n={} k={} d={} "
                         "fa={}".format(n, k, d, fa))

    rng = random.Random(seed)
    probability = min(1.0, float(d) / n)
    edges = [(q, letter, target)
             for q in range(n)
             for letter in range(k)
             for target in range(n)
             if rng.random() < probability]
    accepting = rng.sample(range(n), int(math.ceil(fa * n)))

    return Nba.build(letters_for(k), n, [0], accepting, edges)


def universal_nba(alphabet):
    """One accepting state with a self-loop on every letter."""
    return Nba.build(alphabet, 1, [0], [0],
                     [(0, letter, 0) for letter in range(len(alphabet))])


def empty_nba(alphabet):
    """One non-accepting state with a self-loop on every letter."""
    return Nba.build(alphabet, 1, [0], [],
                     [(0, letter, 0) for letter in range(len(alphabet))])


def remove_accepting(a, q):
    """Return a copy of 'a' in which q is no longer accepting."""
    return replace(a, accepting=a.accepting - {q})


def remove_transition(a, src, letter, dst):
    """Return a copy of 'a' without the edge src -letter-> dst."""
    return Nba.build(a.alphabet, a.n, a.initial, a.accepting,
                     [edge for edge in a.transitions()
                      if edge != (src, letter, dst)])
