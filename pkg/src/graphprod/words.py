"""Words, graphical reduction and canonical normal forms.

A word is a tuple of syllables; a syllable pairs a vertex index with a
nonidentity element of that vertex group (the identity is allowed on input
and removed by reduction). Two facts drive everything here:

  * a word has minimal syllable count among all words representing the same
    element exactly when it is graphically reduced, i.e. it has no identity
    syllable and no pair i < j on the same vertex whose intermediate
    syllables all commute with that vertex;
  * two graphically reduced words represent the same element exactly when
    one can be carried to the other by swapping adjacent syllables on
    adjacent vertices.

So equality is decided by reducing and comparing a canonical linearization
of the swap class, and geodesic length in the product is the sum of the
vertex-group geodesic lengths of a reduced form.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import UnknownVertex, WordSyntaxError
from .specfile import GroupSpec


class Syllable(NamedTuple):
    vertex: int
    elem: object


Word = tuple  # of Syllable


class NormalForm:
    """Canonical representative of a swap class; compare and hash freely."""

    __slots__ = ("word",)

    def __init__(self, word: Word):
        self.word = tuple(word)

    def __eq__(self, other):
        return isinstance(other, NormalForm) and self.word == other.word

    def __hash__(self):
        return hash(("NormalForm", self.word))

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __repr__(self):
        return f"NormalForm({self.word!r})"


def check_word(spec: GroupSpec, word) -> Word:
    """Validate vertex indices and payloads, returning the word as a tuple."""
    out = []
    for syl in word:
        v, g = syl
        if not isinstance(v, int) or not 0 <= v < spec.graph.n:
            raise UnknownVertex(f"vertex index {v!r} out of range")
        spec.groups[v].check(g)
        out.append(Syllable(v, g))
    return tuple(out)


# ---------------------------------------------------------------------------
# grammar


def parse_word(spec: GroupSpec, text: str) -> Word:
    """Parse `vertex:atom` tokens separated by single spaces.

    The empty string is the empty word. The grammar is strict: repeated,
    leading or trailing spaces are syntax errors rather than being glossed
    over, so parse(format(w)) == w byte for byte.
    """
    if not isinstance(text, str):
        raise WordSyntaxError("word must be a string")
    if text == "":
        return ()
    out = []
    for token in text.split(" "):
        if token == "":
            raise WordSyntaxError("empty token (check for doubled spaces)")
        vertex, sep, atom = token.partition(":")
        if not sep or not atom:
            raise WordSyntaxError(f"token {token!r} is not vertex:atom")
        try:
            v = spec.vertices.index(vertex)
        except ValueError:
            raise UnknownVertex(f"unknown vertex {vertex!r}") from None
        out.append(Syllable(v, spec.groups[v].parse_atom(atom)))
    return tuple(out)


def format_word(spec: GroupSpec, word) -> str:
    word = check_word(spec, word)
    return " ".join(
        f"{spec.vertices[v]}:{spec.groups[v].atom(g)}" for v, g in word
    )


# ---------------------------------------------------------------------------
# reduction


def _merge_target(spec: GroupSpec, word, j: int):
    """Index i to merge syllable j onto, or None.

    Scanning left from j, the first syllable on the same vertex is the only
    candidate: a same-vertex syllable is never adjacent to the vertex, so
    anything further left is blocked by it. A non-adjacent intermediate
    stops the scan.
    """
    v = word[j].vertex
    for i in range(j - 1, -1, -1):
        if word[i].vertex == v:
            return i
        if not spec.graph.adjacent(word[i].vertex, v):
            return None
    return None


def reduce(spec: GroupSpec, word) -> Word:
    """Graphical reduction: drop identities, merge the leftmost mergeable pair
    (smallest j, then its unique i), rescan until stable."""
    w = [s for s in check_word(spec, word) if not spec.groups[s.vertex].is_identity(s.elem)]
    changed = True
    while changed:
        changed = False
        for j in range(1, len(w)):
            i = _merge_target(spec, w, j)
            if i is None:
                continue
            g = spec.groups[w[i].vertex].compose(w[i].elem, w[j].elem)
            middle = w[i + 1 : j]
            tail = w[j + 1 :]
            if spec.groups[w[i].vertex].is_identity(g):
                w[i:] = middle + tail
            else:
                w[i:] = [Syllable(w[i].vertex, g)] + middle + tail
            changed = True
            break
    return tuple(w)


def is_graphically_reduced(spec: GroupSpec, word) -> bool:
    word = check_word(spec, word)
    if any(spec.groups[v].is_identity(g) for v, g in word):
        return False
    return all(_merge_target(spec, word, j) is None for j in range(1, len(word)))


def word_length(spec: GroupSpec, word) -> int:
    """Geodesic length over the union of vertex-group generators."""
    return sum(
        spec.groups[v].element_length(g) for v, g in reduce(spec, word)
    )


# ---------------------------------------------------------------------------
# canonical form


def canonical_form(spec: GroupSpec, word) -> NormalForm:
    """Lexicographically least linearization of the swap class.

    Greedy: repeatedly emit the least available syllable, where available
    means every remaining syllable to its left sits on an adjacent vertex
    (a same-vertex blocker is never adjacent, so availability also encodes
    the trace order). Keys are (vertex index, element order key), both fixed
    by declaration order, so the result is deterministic.
    """
    rem = list(reduce(spec, word))
    out = []
    while rem:
        best = None
        best_key = None
        for p, syl in enumerate(rem):
            if any(not spec.graph.adjacent(rem[q].vertex, syl.vertex) for q in range(p)):
                continue
            key = (syl.vertex, spec.groups[syl.vertex].key(syl.elem))
            if best is None or key < best_key:
                best, best_key = p, key
        out.append(rem.pop(best))
    return NormalForm(tuple(out))


def equal(spec: GroupSpec, w1, w2) -> bool:
    """Word problem: do two words represent the same element?"""
    return canonical_form(spec, w1) == canonical_form(spec, w2)


def invert_word(spec: GroupSpec, word) -> Word:
    word = check_word(spec, word)
    return tuple(
        Syllable(v, spec.groups[v].invert(g)) for v, g in reversed(word)
    )
