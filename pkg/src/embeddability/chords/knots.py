"""Combinatorial diagrams of singular knots and evaluation of arrow formulas.

A diagram is a cyclic sequence of events along the circle.  A chord event
is a chord label; each label occurs twice and marks a passage through a
double point.  A crossing event ``c<id><o|u><+|->`` marks the over or
under passage of an ordinary crossing with its sign.  A crossing lies on
the arc that starts at the last chord event before it.
"""

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .diagram import ChordDiagram

_CROSSING = re.compile(r"^c(\d+)([ou])([+-])$")


@dataclass(frozen=True)
class Crossing:
    ident: int
    over: bool
    sign: int

    def token(self):
        return f"c{self.ident}{'o' if self.over else 'u'}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class SingularKnotDiagram:
    """Events along the circle: chord labels and Crossing records.

    >>> k = SingularKnotDiagram.parse("1 c0o+ 2 1 c0u+ 2")
    >>> str(k.diagram), k.crossing_arcs()
    ('1 2 1 2', {0: (2, 0, 1)})
    """

    events: tuple

    def __post_init__(self):
        chords = [e for e in self.events if not isinstance(e, Crossing)]
        if not chords:
            raise ValueError("a singular knot diagram needs at least one double point")
        ChordDiagram(tuple(chords))  # each label exactly twice
        seen = {}
        for e in self.events:
            if isinstance(e, Crossing):
                seen.setdefault(e.ident, []).append(e)
        for ident, pair in seen.items():
            if len(pair) != 2 or pair[0].over == pair[1].over:
                raise ValueError(f"crossing {ident} must be passed once over and once under")
            if pair[0].sign != pair[1].sign:
                raise ValueError(f"crossing {ident} has inconsistent signs")

    @classmethod
    def parse(cls, text):
        events = []
        for tok in text.split():
            m = _CROSSING.match(tok)
            if m:
                events.append(Crossing(int(m.group(1)), m.group(2) == "o", 1 if m.group(3) == "+" else -1))
            else:
                events.append(tok)
        return cls(tuple(events))

    def to_text(self):
        return " ".join(e.token() if isinstance(e, Crossing) else str(e) for e in self.events)

    @property
    def diagram(self):
        return ChordDiagram(tuple(e for e in self.events if not isinstance(e, Crossing)))

    def crossing_arcs(self):
        """For each crossing id: (under arc, over arc, sign)."""
        n_chord = sum(1 for e in self.events if not isinstance(e, Crossing))
        under, over, sign = {}, {}, {}
        pos = -1
        for e in self.events:
            if isinstance(e, Crossing):
                # events before the first double point sit on the last arc
                (over if e.over else under)[e.ident] = n_chord - 1 if pos < 0 else pos
                sign[e.ident] = e.sign
            else:
                pos += 1
        return {i: (under[i], over[i], sign[i]) for i in sorted(sign)}

    def crossing_change(self, ident):
        """Switch over and under at one crossing; the sign flips."""
        out = []
        found = False
        for e in self.events:
            if isinstance(e, Crossing) and e.ident == ident:
                out.append(Crossing(ident, not e.over, -e.sign))
                found = True
            else:
                out.append(e)
        if not found:
            raise KeyError(f"no crossing {ident}")
        return SingularKnotDiagram(tuple(out))


def evaluate_arrow_formula(k, F):
    """Sum of f(C, D) times the sign over crossings with under arc C and over arc D.

    >>> from .derivative import ArrowFormula
    >>> k = SingularKnotDiagram.parse("1 c0o+ 2 1 c0u+ 2")
    >>> evaluate_arrow_formula(k, ArrowFormula(k.diagram, {(2, 0): 3}, constant=1))
    Fraction(4, 1)
    """
    if k.diagram != F.diagram:
        raise ValueError(f"knot diagram has chords {k.diagram}, formula is for {F.diagram}")
    total = Fraction(F.constant, 2) if F.doubled else Fraction(F.constant)
    for c, d, s in k.crossing_arcs().values():
        total += s * F.coefficient(c, d)
    return total


def random_knot_diagram(d, n_crossings, rng):
    """The chord word of d with both passages of each crossing dropped into random slots."""
    slots = [[] for _ in range(d.n_arcs + 1)]
    for ident in range(n_crossings):
        s = 1 if rng.random() < 0.5 else -1
        first_over = rng.random() < 0.5
        for over in (first_over, not first_over):
            slots[rng.randrange(len(slots))].append(Crossing(ident, over, s))
    for s in slots:
        rng.shuffle(s)
    events = list(slots[0])
    for p in range(d.n_arcs):
        events.append(d.word[p] + 1)
        events.extend(slots[p + 1])
    return SingularKnotDiagram(tuple(e if isinstance(e, Crossing) else str(e) for e in events))


def crossing_change_pairs(d, count=20, max_crossings=4, seed=0):
    """Random (negative, positive) diagram pairs differing at one crossing.

    Yields (before, after, under arc, over arc) where ``before`` has the
    crossing negative.
    """
    rng = random.Random(seed)
    for _ in range(count):
        k = random_knot_diagram(d, rng.randint(1, max_crossings), rng)
        arcs = k.crossing_arcs()
        ident = rng.choice(sorted(arcs))
        if arcs[ident][2] > 0:
            k = k.crossing_change(ident)
        after = k.crossing_change(ident)
        c, e, _ = k.crossing_arcs()[ident]
        yield k, after, c, e


def formula_derivative_matches(F, data, count=20, seed=0):
    """Check v(positive) - v(negative) = v'({C, D}) on random crossing changes."""
    for before, after, c, e in crossing_change_pairs(F.diagram, count, seed=seed):
        if evaluate_arrow_formula(after, F) - evaluate_arrow_formula(before, F) != data(c, e):
            return False
    return True
