"""Elements and arithmetic of a graph product of free components.

Elements are kept in a canonical reduced expression: a sequence of
nonidentity component elements in which no two entries of the same vertex can
be brought together by swapping adjacent-vertex neighbours.  The canonical
representative is the greedy least-vertex-first form, so equality of elements
is equality of expressions.

Component payloads: monogenic components store a positive exponent, free
components a nonempty letter tuple.  Neither kind has nontrivial units and no
product of nonidentity elements is the identity, which the algorithms below
rely on (amalgamation never deletes).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .graph import GraphError, GraphProduct

Payload = Union[int, tuple[str, ...]]

_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")


@dataclass(frozen=True)
class ComponentElement:
    """A single nonidentity element of one vertex's component."""

    vertex: str
    payload: Payload

    def __str__(self) -> str:
        if isinstance(self.payload, int):
            return self.vertex if self.payload == 1 else f"{self.vertex}^{self.payload}"
        return " ".join(_collapse_letters(self.payload))


def _collapse_letters(letters: Sequence[str]) -> Iterator[str]:
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        yield letters[i] if j - i == 1 else f"{letters[i]}^{j - i}"
        i = j


@dataclass(frozen=True)
class GPElement:
    """Canonical reduced expression of a graph-product element."""

    gp: GraphProduct
    expr: tuple[ComponentElement, ...]

    @property
    def length(self) -> int:
        """Number of components of any reduced expression."""
        return len(self.expr)

    def letter_length(self) -> int:
        """Total generator count; finer than component length, utility only."""
        return sum(
            ce.payload if isinstance(ce.payload, int) else len(ce.payload)
            for ce in self.expr
        )

    def is_identity(self) -> bool:
        return not self.expr

    def __mul__(self, other: "GPElement") -> "GPElement":
        return multiply(self, other)

    def __str__(self) -> str:
        if not self.expr:
            return "1"
        return " ".join(str(ce) for ce in self.expr)

    def __repr__(self) -> str:
        return f"<GPElement {self}>"


# ---------------------------------------------------------------------------
# component-level arithmetic

def _is_identity_payload(p: Payload) -> bool:
    return p == 0 or p == ()


def comp_mul(x: Payload, y: Payload) -> Payload:
    return x + y  # int addition or tuple concatenation


def comp_right_divide(x: Payload, y: Payload) -> Optional[Payload]:
    """r with x = r * y inside the component, or None."""
    if isinstance(x, int):
        return x - y if x >= y else None
    if y == () or (len(x) >= len(y) and x[len(x) - len(y):] == y):
        return x[: len(x) - len(y)]
    return None


def comp_left_divide(x: Payload, y: Payload) -> Optional[Payload]:
    """r with x = y * r inside the component, or None."""
    if isinstance(x, int):
        return x - y if x >= y else None
    if x[: len(y)] == y:
        return x[len(y):]
    return None


def comp_lclm(x: Payload, y: Payload) -> Optional[tuple[Payload, Payload, Payload]]:
    """(s, t, m) with m = s*x = t*y generating the intersection, or None.

    In a free monoid two elements have a common left multiple exactly when
    one is a suffix of the other; for a monogenic component the intersection
    always exists and is governed by max of exponents.
    """
    if isinstance(x, int):
        m = max(x, y)
        return m - x, m - y, m
    s = comp_right_divide(y, x)
    if s is not None:
        return s, (), y
    t = comp_right_divide(x, y)
    if t is not None:
        return (), t, x
    return None


def comp_hclf(x: Payload, y: Payload) -> Payload:
    """Highest common left factor inside the component (maybe identity)."""
    if isinstance(x, int):
        return min(x, y)
    n = 0
    while n < len(x) and n < len(y) and x[n] == y[n]:
        n += 1
    return x[:n]


# ---------------------------------------------------------------------------
# normal form

def _validate_component(gp: GraphProduct, ce: ComponentElement) -> None:
    v = ce.vertex
    gp.vertex_index(v)
    if gp.is_mono(v):
        if not isinstance(ce.payload, int) or ce.payload < 1:
            raise ValueError(f"monogenic payload for {v!r} must be a positive int")
    else:
        if not isinstance(ce.payload, tuple) or not ce.payload:
            raise ValueError(f"free payload for {v!r} must be a nonempty letter tuple")
        alphabet = set(gp.letters(v))
        for a in ce.payload:
            if a not in alphabet:
                raise ValueError(f"letter {a!r} not in alphabet of {v!r}")


def normal_form(gp: GraphProduct, raw: Iterable[ComponentElement]) -> GPElement:
    """Canonical form of an arbitrary expression sequence.

    First amalgamates every pair of same-vertex components separated only by
    adjacent-vertex components, then repeatedly emits the least-vertex
    component that can be shuffled to the front.
    """
    comps = [ce if isinstance(ce, ComponentElement) else ComponentElement(*ce) for ce in raw]
    for ce in comps:
        _validate_component(gp, ce)

    adjacent = gp.adjacent

    # amalgamation fixpoint
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(comps):
            v = comps[i].vertex
            j = i + 1
            while j < len(comps):
                if comps[j].vertex == v:
                    comps[i] = ComponentElement(v, comp_mul(comps[i].payload, comps[j].payload))
                    del comps[j]
                    changed = True
                    continue
                if not adjacent(comps[j].vertex, v):
                    break
                j += 1
            i += 1

    # greedy least-vertex-first extraction
    vindex = gp.vertex_index
    out: list[ComponentElement] = []
    while comps:
        best_pos = None
        best_key = None
        for pos, ce in enumerate(comps):
            if all(adjacent(prev.vertex, ce.vertex) for prev in comps[:pos]):
                key = vindex(ce.vertex)
                if best_key is None or key < best_key:
                    best_key, best_pos = key, pos
        out.append(comps.pop(best_pos))

    return GPElement(gp, tuple(out))


def _tokenize(word: str | Iterable) -> list[tuple[str, int]]:
    if isinstance(word, str):
        tokens = word.split()
    else:
        tokens = list(word)
    out = []
    for tok in tokens:
        if isinstance(tok, tuple):
            out.append(tok)
            continue
        if tok == "1":
            continue
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return out


def make_element(gp: GraphProduct, word: str | Iterable) -> GPElement:
    """Canonical image of a word over the declared letters.

    ``word`` is whitespace-separated letter tokens with optional ``^k``
    exponents (k >= 1); ``"1"`` denotes the identity.
    """
    raw: list[ComponentElement] = []
    for letter, k in _tokenize(word):
        if k < 1:
            raise ValueError(f"exponent on {letter!r} must be >= 1")
        v = gp.vertex_of_letter(letter)
        if gp.is_mono(v):
            raw.append(ComponentElement(v, k))
        else:
            raw.append(ComponentElement(v, (letter,) * k))
    return normal_form(gp, raw)


def identity(gp: GraphProduct) -> GPElement:
    return GPElement(gp, ())


def component_embed(gp: GraphProduct, v: str, payload: Payload) -> GPElement:
    """Embed a single component element; identity payload gives the identity."""
    if _is_identity_payload(payload):
        gp.vertex_index(v)
        return identity(gp)
    ce = ComponentElement(v, payload)
    _validate_component(gp, ce)
    return GPElement(gp, (ce,))


def _require_same(a: GPElement, b: GPElement) -> None:
    if a.gp != b.gp:
        raise ValueError("elements belong to different graphs")


def multiply(a: GPElement, b: GPElement) -> GPElement:
    _require_same(a, b)
    return normal_form(a.gp, a.expr + b.expr)


# ---------------------------------------------------------------------------
# final / initial components

def split_final(
    gp: GraphProduct, expr: Sequence[ComponentElement], v: str
) -> tuple[Optional[ComponentElement], tuple[ComponentElement, ...]]:
    """Final v-component and raw complement of an arbitrary reduced expression.

    The component is the rightmost v-entry provided everything after it is
    adjacent to v; otherwise the final v-component is the identity (None).
    """
    gp.vertex_index(v)
    last = None
    for j, ce in enumerate(expr):
        if ce.vertex == v:
            last = j
    if last is None:
        return None, tuple(expr)
    for k in range(last + 1, len(expr)):
        if not gp.adjacent(expr[k].vertex, v):
            return None, tuple(expr)
    return expr[last], tuple(expr[:last]) + tuple(expr[last + 1:])


def split_initial(
    gp: GraphProduct, expr: Sequence[ComponentElement], v: str
) -> tuple[Optional[ComponentElement], tuple[ComponentElement, ...]]:
    """Dual of split_final: leftmost v-entry movable to the front."""
    gp.vertex_index(v)
    first = None
    for j, ce in enumerate(expr):
        if ce.vertex == v:
            first = j
            break
    if first is None:
        return None, tuple(expr)
    for k in range(first):
        if not gp.adjacent(expr[k].vertex, v):
            return None, tuple(expr)
    return expr[first], tuple(expr[:first]) + tuple(expr[first + 1:])


def final_component(a: GPElement, v: str) -> tuple[Optional[ComponentElement], GPElement]:
    """(d, a') with a = a'*d when d is nonidentity, a' = a when d is None."""
    d, rest = split_final(a.gp, a.expr, v)
    if d is None:
        return None, a
    return d, normal_form(a.gp, rest)


def initial_component(a: GPElement, v: str) -> tuple[Optional[ComponentElement], GPElement]:
    """(d, a') with a = d*a' when d is nonidentity, a' = a when d is None."""
    d, rest = split_initial(a.gp, a.expr, v)
    if d is None:
        return None, a
    return d, normal_form(a.gp, rest)


# ---------------------------------------------------------------------------
# division, LCLM, HCLF

def right_divide(a: GPElement, c: GPElement) -> Optional[GPElement]:
    """The unique b with a = b*c, or None when c does not right-divide a."""
    _require_same(a, c)
    cur = a
    for ce in reversed(c.expr):
        d, comp = final_component(cur, ce.vertex)
        if d is None:
            return None
        rem = comp_right_divide(d.payload, ce.payload)
        if rem is None:
            return None
        cur = multiply(comp, component_embed(a.gp, ce.vertex, rem))
    return cur


def left_divide(a: GPElement, c: GPElement) -> Optional[GPElement]:
    """The unique b with a = c*b, or None."""
    _require_same(a, c)
    cur = a
    for ce in c.expr:
        d, comp = initial_component(cur, ce.vertex)
        if d is None:
            return None
        rem = comp_left_divide(d.payload, ce.payload)
        if rem is None:
            return None
        cur = multiply(component_embed(a.gp, ce.vertex, rem), comp)
    return cur


def _posneg_single(
    c: GPElement, dce: ComponentElement
) -> Optional[tuple[GPElement, GPElement]]:
    """Rewrite (translation by c) . (inverse translation by dce).

    Returns (a, b) with the composite equal to inverse-translation by a
    followed by translation by b, where a has at most one component; None
    when the composite is the zero map.
    """
    gp = c.gp
    if c.is_identity():
        return GPElement(gp, (dce,)), c
    c1, rest = c.expr[0], normal_form(gp, c.expr[1:])
    sub = _posneg_single(rest, dce)
    if sub is None:
        return None
    a, b = sub
    if a.is_identity():
        return a, multiply(GPElement(gp, (c1,)), b)
    ace = a.expr[0]
    if c1.vertex == ace.vertex:
        res = comp_lclm(c1.payload, ace.payload)
        if res is None:
            return None
        s, t, _ = res
        return (
            component_embed(gp, c1.vertex, s),
            multiply(component_embed(gp, c1.vertex, t), b),
        )
    if gp.adjacent(c1.vertex, ace.vertex):
        return a, multiply(GPElement(gp, (c1,)), b)
    return None


def _posneg(c: GPElement, d: GPElement) -> Optional[tuple[GPElement, GPElement]]:
    """Full positive/negative reduction: translation by c then inverse
    translation by d, peeling d one component at a time from the right."""
    if d.is_identity():
        return identity(c.gp), c
    dpre = normal_form(d.gp, d.expr[:-1])
    sub1 = _posneg_single(c, d.expr[-1])
    if sub1 is None:
        return None
    a1, b1 = sub1
    sub2 = _posneg(b1, dpre)
    if sub2 is None:
        return None
    a2, b2 = sub2
    return multiply(a2, a1), b2


def lclm(b: GPElement, c: GPElement) -> Optional[tuple[GPElement, GPElement, GPElement]]:
    """Least common left multiple: (s, t, m) with m = s*b = t*c, or None.

    None signals that b and c have no common left multiple at all.
    """
    _require_same(b, c)
    res = _posneg(b, c)
    if res is None:
        return None
    s, t = res
    m = multiply(s, b)
    assert m == multiply(t, c)
    return s, t, m


def hclf(a: GPElement, b: GPElement) -> GPElement:
    """Highest common left factor: greedy stripping of shared initial
    component factors, least vertex first."""
    _require_same(a, b)
    gp = a.gp
    acc = identity(gp)
    progress = True
    while progress:
        progress = False
        for v in gp.vertices:
            da, ra = initial_component(a, v)
            db, rb = initial_component(b, v)
            if da is None or db is None:
                continue
            f = comp_hclf(da.payload, db.payload)
            if _is_identity_payload(f):
                continue
            acc = multiply(acc, component_embed(gp, v, f))
            a = multiply(component_embed(gp, v, comp_left_divide(da.payload, f)), ra)
            b = multiply(component_embed(gp, v, comp_left_divide(db.payload, f)), rb)
            progress = True
            break
    return acc
