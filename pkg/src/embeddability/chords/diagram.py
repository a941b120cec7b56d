"""Chord diagrams on an oriented circle and their quotient graphs.

A diagram is given by a double-occurrence word: positions 0, ..., 2m-1 run
around the circle and the two positions carrying the same token form a
chord.  Arc i is the interval from position i to position i+1 (mod 2m).
Gluing the endpoints of each chord gives the quotient graph G: one
4-valent vertex per chord and one edge per arc.

At a chord vertex the four half-edges are ``("in", i)`` (the end of arc i)
and ``("out", i)`` (the start of arc i).  The circle passes straight through
the vertex twice, once per endpoint p of the chord, along the strand
``(("in", p - 1), ("out", p))``.
"""

from dataclasses import dataclass
from itertools import combinations

import networkx as nx


@dataclass(frozen=True)
class ChordDiagram:
    """A perfect matching on the positions of an oriented circle.

    >>> d = parse_diagram("1 2 1 2")
    >>> d.m, d.n_arcs, d.chords
    (2, 4, ((0, 2), (1, 3)))
    """

    word: tuple

    def __post_init__(self):
        counts = {}
        for t in self.word:
            counts[t] = counts.get(t, 0) + 1
        bad = [t for t, c in counts.items() if c != 2]
        if bad:
            raise ValueError(f"every token must occur exactly twice; offending: {bad!r}")
        seen = {}
        norm = []
        for t in self.word:
            norm.append(seen.setdefault(t, len(seen)))
        object.__setattr__(self, "word", tuple(norm))

    @property
    def m(self):
        return len(self.word) // 2

    @property
    def n_arcs(self):
        return len(self.word)

    @property
    def chords(self):
        """Chord k as the sorted pair of its positions, chords in order of first appearance."""
        pos = {}
        for p, t in enumerate(self.word):
            pos.setdefault(t, []).append(p)
        return tuple(tuple(pos[k]) for k in range(self.m))

    def chord_at(self, p):
        return self.word[p % self.n_arcs]

    def tail(self, arc):
        """Chord vertex where the arc starts."""
        return self.word[arc]

    def head(self, arc):
        return self.word[(arc + 1) % self.n_arcs]

    def strands(self, w):
        """The two strands through chord vertex w, in order of the chord's positions."""
        N = self.n_arcs
        return tuple((("in", (p - 1) % N), ("out", p)) for p in self.chords[w])

    def half_edges(self, w):
        a, b = self.strands(w)
        return a + b

    def vertex_of(self, h):
        kind, arc = h
        return self.tail(arc) if kind == "out" else self.head(arc)

    def is_straight(self, w, h1, h2):
        """Whether passing from half-edge h1 to h2 at w follows a strand."""
        return any({h1, h2} == set(s) for s in self.strands(w))

    def interleaved(self, i, j):
        a, b = self.chords[i]
        c, d = self.chords[j]
        return (a < c < b) != (a < d < b)

    def to_text(self):
        return " ".join(str(t + 1) for t in self.word)

    def __str__(self):
        return self.to_text()


def parse_diagram(word):
    """Read a double-occurrence word given as a string or a token sequence.

    >>> parse_diagram("1 1 2 2").chords
    ((0, 1), (2, 3))
    >>> parse_diagram("1 2 1")
    Traceback (most recent call last):
    ...
    ValueError: every token must occur exactly twice; offending: ['2']
    """
    tokens = word.replace(",", " ").split() if isinstance(word, str) else list(word)
    return ChordDiagram(tuple(tokens))


def interlacement(d):
    """Graph on chords with an edge for every interleaved pair."""
    G = nx.Graph()
    G.add_nodes_from(range(d.m))
    G.add_edges_from((i, j) for i, j in combinations(range(d.m), 2) if d.interleaved(i, j))
    return G


def irreducible_factors(d):
    """Partition of the chords into irreducible factors (components of the interlacement graph).

    >>> irreducible_factors(parse_diagram("1 1 2 2"))
    [[0], [1]]
    >>> len(irreducible_factors(parse_diagram("1 2 3 1 2 3")))
    1
    """
    return sorted(sorted(c) for c in nx.connected_components(interlacement(d)))


def _matchings(points):
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in _matchings(rest):
            yield [(a, points[i])] + m


def _canonical(word):
    seen = {}
    return tuple(seen.setdefault(t, len(seen)) for t in word)


def all_diagrams(m, up_to_rotation=True):
    """Every chord diagram with m chords, optionally one per rotation class."""
    out = set()
    for match in _matchings(list(range(2 * m))):
        word = [0] * (2 * m)
        for k, (a, b) in enumerate(match):
            word[a] = word[b] = k
        w = _canonical(word)
        if up_to_rotation:
            w = min(_canonical(w[r:] + w[:r]) for r in range(len(w))) if w else w
        out.add(w)
    return [ChordDiagram(w) for w in sorted(out)]
