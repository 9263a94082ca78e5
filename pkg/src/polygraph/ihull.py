"""Arithmetic and order theory of the inverse hull in pair form.

Nonzero elements are ordered pairs (a, b) of graph-product elements, read as
"inverse translation by a, then translation by b".  Because the supported
components have trivial unit groups, pairs are equal exactly when their
coordinates are equal, and a single zero absorbs every failed composition.
When every component is monogenic this monoid is the polygraph monoid of the
graph, generalizing the bicyclic and polycyclic monoids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .gproduct import (
    GPElement,
    component_embed,
    identity,
    lclm,
    make_element,
    multiply,
    right_divide,
    hclf,
    left_divide,
)
from .graph import GraphProduct


class _Zero:
    """The absorbing zero; a shared singleton."""

    _instance: "_Zero | None" = None

    def __new__(cls) -> "_Zero":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "0"

    def __str__(self) -> str:
        return "0"


ZERO = _Zero()


@dataclass(frozen=True)
class IHPair:
    """Nonzero inverse-hull element: inverse translation by a, then by b."""

    a: GPElement
    b: GPElement

    def __str__(self) -> str:
        return f"[{self.a} | {self.b}]"

    def __repr__(self) -> str:
        return f"<IHPair {self}>"


IHElement = Union[IHPair, _Zero]

SignedToken = tuple[str, int]  # (letter, +1 or -1)

_SIGNED_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")


@dataclass(frozen=True)
class Relation:
    """A defining relation; ``right`` is a word or the zero symbol."""

    left: tuple[SignedToken, ...]
    right: tuple[SignedToken, ...] | _Zero

    def __str__(self) -> str:
        return f"{format_pgword(self.left)} = {format_pgword(self.right)}"


def ih_identity(gp: GraphProduct) -> IHPair:
    e = identity(gp)
    return IHPair(e, e)


def ih_multiply(s: IHElement, t: IHElement) -> IHElement:
    if s is ZERO or t is ZERO:
        return ZERO
    res = lclm(s.b, t.a)
    if res is None:
        return ZERO
    u, w, _ = res
    return IHPair(multiply(u, s.a), multiply(w, t.b))


def ih_inverse(s: IHElement) -> IHElement:
    if s is ZERO:
        return ZERO
    return IHPair(s.b, s.a)


def is_idempotent(s: IHElement) -> bool:
    return s is ZERO or s.a == s.b


def natural_le(s: IHElement, t: IHElement) -> bool:
    """The natural partial order; witnessed by a single right division."""
    if s is ZERO:
        return True
    if t is ZERO:
        return False
    x = right_divide(s.a, t.a)
    if x is None:
        return False
    return s.b == multiply(x, t.b)


def max_above(s: IHElement) -> IHPair:
    """The unique maximal element above a nonzero s: strip the highest
    common left factor of its coordinates."""
    if s is ZERO:
        raise ValueError("zero has no maximal element above it")
    x = hclf(s.a, s.b)
    return IHPair(left_divide(s.a, x), left_divide(s.b, x))


def green_L(s: IHElement, t: IHElement) -> bool:
    if s is ZERO or t is ZERO:
        return s is t
    return s.b == t.b


def green_R(s: IHElement, t: IHElement) -> bool:
    if s is ZERO or t is ZERO:
        return s is t
    return s.a == t.a


def green_H(s: IHElement, t: IHElement) -> bool:
    return green_L(s, t) and green_R(s, t)


# ---------------------------------------------------------------------------
# signed words

def parse_pgword(text: str | Iterable[SignedToken]) -> tuple[SignedToken, ...]:
    """Signed-word syntax: letter tokens with optional ``^k`` / ``^-k``."""
    if not isinstance(text, str):
        return tuple(text)
    out: list[SignedToken] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _SIGNED_RE.match(tok)
        if not m:
            raise ValueError(f"bad signed token {tok!r}")
        letter, exp = m.group(1), int(m.group(2)) if m.group(2) else 1
        if exp == 0:
            raise ValueError(f"zero exponent on {letter!r}")
        sign = 1 if exp > 0 else -1
        out.extend((letter, sign) for _ in range(abs(exp)))
    return tuple(out)


def format_pgword(word: tuple[SignedToken, ...] | _Zero) -> str:
    if word is ZERO:
        return "0"
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        letter, sign = word[i]
        n = (j - i) * sign
        parts.append(letter if n == 1 else f"{letter}^{n}")
        i = j
    return " ".join(parts)


def eval_word(gp: GraphProduct, word: str | Iterable[SignedToken]) -> IHElement:
    """Evaluate a signed word: g maps to (1, g), g^-1 to (g, 1)."""
    acc: IHElement = ih_identity(gp)
    for letter, sign in parse_pgword(word):
        g = make_element(gp, [(letter, 1)])
        factor = IHPair(identity(gp), g) if sign > 0 else IHPair(g, identity(gp))
        acc = ih_multiply(acc, factor)
    return acc


# ---------------------------------------------------------------------------
# presentation

def generate_presentation(gp: GraphProduct) -> tuple[Relation, ...]:
    """Defining relations of the inverse hull over the signed letters.

    Per component: the bicyclic relation for monogenic vertices and the
    polycyclic relations for free ones.  Across vertices: annihilation for
    distinct non-adjacent pairs, and the three commutation shapes for
    adjacent pairs.  Ordered deterministically by declaration order.
    """
    rels: list[Relation] = []
    verts = gp.vertices

    for v in verts:
        letters = gp.letters(v)
        for x in letters:
            rels.append(Relation(((x, 1), (x, -1)), ()))
        for x in letters:
            for y in letters:
                if x != y:
                    rels.append(Relation(((x, 1), (y, -1)), ZERO))

    for u in verts:
        for w in verts:
            if u == w or gp.adjacent(u, w):
                continue
            for x in gp.letters(u):
                for y in gp.letters(w):
                    rels.append(Relation(((x, 1), (y, -1)), ZERO))

    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            if not gp.adjacent(u, w):
                continue
            for x in gp.letters(u):
                for y in gp.letters(w):
                    rels.append(Relation(((x, 1), (y, 1)), ((y, 1), (x, 1))))
                    rels.append(Relation(((x, 1), (y, -1)), ((y, -1), (x, 1))))
                    rels.append(Relation(((y, 1), (x, -1)), ((x, -1), (y, 1))))
                    rels.append(Relation(((x, -1), (y, -1)), ((y, -1), (x, -1))))
    return tuple(rels)


@dataclass(frozen=True)
class RelationReport:
    checked: int
    violations: tuple[Relation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_relations(gp: GraphProduct) -> RelationReport:
    """Evaluate both sides of every generated relation; expect no mismatch."""
    bad = []
    rels = generate_presentation(gp)
    for rel in rels:
        lhs = eval_word(gp, rel.left)
        rhs = ZERO if rel.right is ZERO else eval_word(gp, rel.right)
        if lhs != rhs and not (lhs is ZERO and rhs is ZERO):
            bad.append(rel)
    return RelationReport(len(rels), tuple(bad))


# ---------------------------------------------------------------------------
# text form

def parse_ihelement(gp: GraphProduct, text: str) -> IHElement:
    """Parse "0" or "[<a> | <b>]" with "1" for the empty word."""
    text = text.strip()
    if text == "0":
        return ZERO
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad inverse-hull element {text!r}")
    body = text[1:-1]
    if "|" not in body:
        raise ValueError(f"bad inverse-hull element {text!r}")
    left, right = body.split("|", 1)
    return IHPair(make_element(gp, left.strip()), make_element(gp, right.strip()))
