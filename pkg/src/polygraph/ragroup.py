"""Reduced words in the graph group and the prehomomorphism from the
inverse hull into it.

Only all-monogenic graphs are supported: each vertex contributes one group
generator, generators of adjacent vertices commute, and the graph monoid
embeds in this group.  Mapping a nonzero pair (a, b) to the reduced form of
a^-1 b gives a 0-restricted, idempotent-pure prehomomorphism, which is the
witness that the polygraph monoid is strongly E*-unitary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import GraphProduct
from .ihull import IHElement, IHPair, SignedToken, ZERO, _Zero, format_pgword, parse_pgword


@dataclass(frozen=True)
class GroupWord:
    """Canonical reduced word: lexicographically least among the reduced
    words equivalent under commuting swaps, vertex order first and positive
    before negative."""

    gp: GraphProduct
    letters: tuple[SignedToken, ...]

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "GroupWord":
        return group_reduce(self.gp, [(l, -s) for l, s in reversed(self.letters)])

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.gp != other.gp:
            raise ValueError("words belong to different graphs")
        return group_reduce(self.gp, self.letters + other.letters)

    def __str__(self) -> str:
        return format_pgword(self.letters)

    def __repr__(self) -> str:
        return f"<GroupWord {self}>"


GroupOrZero = Union[GroupWord, _Zero]


def _require_mono(gp: GraphProduct) -> None:
    if not gp.all_mono():
        raise ValueError("graph group arithmetic needs all-monogenic components")


def group_reduce(gp: GraphProduct, word: str | Iterable[SignedToken]) -> GroupWord:
    """Cancel shuffle-adjacent inverse pairs to a fixpoint, then take the
    greedy lexicographic canonical form."""
    _require_mono(gp)
    tokens = list(parse_pgword(word))
    for letter, _ in tokens:
        gp.vertex_index(letter)

    adjacent = gp.adjacent

    # cancellation fixpoint: a pair x^e ... x^-e cancels when every token
    # between commutes with x
    changed = True
    while changed:
        changed = False
        for i in range(len(tokens)):
            li, si = tokens[i]
            for j in range(i + 1, len(tokens)):
                lj, sj = tokens[j]
                if lj == li:
                    if sj == -si:
                        del tokens[j]
                        del tokens[i]
                        changed = True
                    break
                if not adjacent(li, lj):
                    break
            if changed:
                break

    vindex = gp.vertex_index
    out: list[SignedToken] = []
    while tokens:
        best_pos = None
        best_key = None
        for pos, (letter, sign) in enumerate(tokens):
            if all(prev != letter and adjacent(prev, letter) for prev, _ in tokens[:pos]):
                key = (vindex(letter), 0 if sign > 0 else 1)
                if best_key is None or key < best_key:
                    best_key, best_pos = key, pos
        out.append(tokens.pop(best_pos))

    return GroupWord(gp, tuple(out))


def group_identity(gp: GraphProduct) -> GroupWord:
    _require_mono(gp)
    return GroupWord(gp, ())


def eta(s: IHElement, gp: GraphProduct | None = None) -> GroupOrZero:
    """Prehomomorphism into the graph group with zero: a pair (a, b) maps to
    the reduced form of a^-1 b, zero maps to zero."""
    if s is ZERO:
        if gp is not None:
            _require_mono(gp)
        return ZERO
    assert isinstance(s, IHPair)
    gp = s.a.gp
    _require_mono(gp)
    tokens: list[SignedToken] = []
    for ce in reversed(s.a.expr):
        tokens.extend((ce.vertex, -1) for _ in range(ce.payload))
    for ce in s.b.expr:
        tokens.extend((ce.vertex, 1) for _ in range(ce.payload))
    return group_reduce(gp, tokens)
