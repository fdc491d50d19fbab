"""Conjugacy: constructive cyclic reduction, floating syllables, witnesses.

The decision procedure follows the structure theory of conjugacy in graph
products:

  1. cyclically reduce both inputs, keeping the conjugators;
  2. split each core into floating syllables (their vertex is adjacent to
     every other syllable's vertex, so they commute with the rest and no
     two share a vertex) and the x-part;
  3. the words are conjugate exactly when the floating vertex sets agree,
     the floats are conjugate inside their vertex groups, and the x-parts
     are related by adjacent swaps plus cyclic rotations.

Every positive answer is returned with an explicit conjugating word and a
closed-form length bound it is certified against.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BfsLimitExceeded, NotCyclicallyReduced
from .graph import enumerate_cliques, opposite_diameter
from .specfile import GroupSpec
from .words import (
    NormalForm,
    Syllable,
    Word,
    canonical_form,
    check_word,
    equal,
    invert_word,
    reduce,
    word_length,
)


@dataclass(frozen=True)
class CyclicReduction:
    """word = conjugator * core * conjugator^-1 with core cyclically reduced."""

    conjugator: Word
    core: Word


@dataclass(frozen=True)
class FloatingDecomposition:
    x_part: Word
    floats: tuple  # Syllables, sorted by vertex, pairwise commuting


@dataclass(frozen=True)
class ConjugacyWitness:
    conjugator: Word
    bound: int
    floating: tuple[str, ...]
    core_a: Word
    core_b: Word


def _front_shuffleable(spec, word, i) -> bool:
    v = word[i].vertex
    return all(spec.graph.adjacent(word[k].vertex, v) for k in range(i))


def _end_shuffleable(spec, word, j) -> bool:
    v = word[j].vertex
    return all(
        spec.graph.adjacent(word[k].vertex, v) for k in range(j + 1, len(word))
    )


def is_graphically_cyclically_reduced(spec: GroupSpec, word) -> bool:
    """No pair i < j on one vertex with i shuffleable to the front and j to
    the end; such a pair would shorten after rotating the word."""
    word = check_word(spec, word)
    from .words import is_graphically_reduced

    if not is_graphically_reduced(spec, word):
        return False
    for j in range(1, len(word)):
        if not _end_shuffleable(spec, word, j):
            continue
        v = word[j].vertex
        for i in range(j):
            if word[i].vertex == v and _front_shuffleable(spec, word, i):
                return False
    return True


def cyclically_reduce(spec: GroupSpec, word) -> CyclicReduction:
    """Peel conjugating syllables until the core is cyclically reduced.

    Each pass strips front/end-shuffleable same-vertex pairs and folds the
    leftovers back onto the residue (see _strip_shuffleable_pairs); folding
    can expose new mergeable pairs, so passes repeat until one makes no
    extraction, which happens exactly when the word is graphically
    cyclically reduced. Syllable count drops every productive pass, so the
    loop terminates. Each pass keeps total length from growing and spends
    at most half the removed length on its conjugator piece, giving
    |core| <= |input| and 2 |conjugator| <= |input|.
    """
    x = reduce(spec, word)
    pieces: list[Syllable] = []
    while True:
        x, piece, progressed = _strip_shuffleable_pairs(spec, x)
        pieces.extend(piece)
        if not progressed:
            return CyclicReduction(reduce(spec, tuple(pieces)), x)


def _strip_shuffleable_pairs(spec: GroupSpec, start: Word):
    """One extraction pass. Returns (new core candidate, conjugator piece,
    whether anything was extracted); the input must be reduced.

    Extraction step: find the least i < j on one vertex, i front-shuffleable
    and j end-shuffleable, the vertex adjacent to every earlier extraction
    vertex whose pair did not cancel; strip both syllables and stack them.
    A cancelling pair leaves nothing behind, so it imposes no constraint on
    later extractions. The constraint keeps the surviving merged syllables
    on pairwise adjacent vertices, which is what lets them commute past the
    stacked halves and fold onto one side of the residue. The fold picks
    the cheaper side (ties go to the front side) so the piece costs at most
    half of what was removed.
    """
    x = list(start)
    a_stack: list[Syllable] = []
    b_stack: list[Syllable] = []
    used: list[int] = []

    while True:
        found = None
        for i in range(len(x)):
            v = x[i].vertex
            if any(not spec.graph.adjacent(u, v) for u in used):
                continue
            if not _front_shuffleable(spec, x, i):
                continue
            for j in range(i + 1, len(x)):
                if x[j].vertex == v and _end_shuffleable(spec, x, j):
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        a_stack.append(x[i])
        b_stack.append(x[j])
        q = spec.groups[x[i].vertex].compose(x[j].elem, x[i].elem)
        if not spec.groups[x[i].vertex].is_identity(q):
            used.append(x[i].vertex)
        x = list(reduce(spec, x[:i] + x[i + 1 : j] + x[j + 1 :]))

    if not a_stack:
        return start, (), False

    merged = []
    for a, b in zip(reversed(a_stack), reversed(b_stack)):
        g = spec.groups[a.vertex].compose(b.elem, a.elem)
        if not spec.groups[a.vertex].is_identity(g):
            merged.append(Syllable(a.vertex, g))

    front_cost = sum(spec.groups[s.vertex].element_length(s.elem) for s in a_stack)
    back_cost = sum(spec.groups[s.vertex].element_length(s.elem) for s in b_stack)
    if front_cost <= back_cost:
        core = reduce(spec, tuple(x) + tuple(merged))
        conjugator = tuple(a_stack)
    else:
        core = reduce(spec, tuple(merged) + tuple(x))
        conjugator = tuple(
            Syllable(s.vertex, spec.groups[s.vertex].invert(s.elem)) for s in b_stack
        )
    return core, conjugator, True


def floating_decomposition(spec: GroupSpec, word) -> FloatingDecomposition:
    """Split a cyclically reduced word into floats and x-part.

    A float's vertex is adjacent to every other syllable's vertex, hence
    floats commute with everything in the word and no two floats can share
    a vertex. The float vertex set and the float elements up to vertex-group
    conjugacy are conjugacy invariants of the whole word.
    """
    word = check_word(spec, word)
    if not is_graphically_cyclically_reduced(spec, word):
        raise NotCyclicallyReduced("floating decomposition needs a cyclically reduced word")
    floats = []
    rest = []
    for p, syl in enumerate(word):
        if all(
            spec.graph.adjacent(other.vertex, syl.vertex)
            for q, other in enumerate(word)
            if q != p
        ):
            floats.append(syl)
        else:
            rest.append(syl)
    floats.sort(key=lambda s: s.vertex)
    return FloatingDecomposition(tuple(rest), tuple(floats))


# ---------------------------------------------------------------------------
# cyclic shuffle class


def cyclic_shuffle_class(spec: GroupSpec, core, limit=None) -> dict:
    """All canonical forms reachable from `core` by swaps and rotations.

    A rotation takes a front-shuffleable syllable s to the back (conjugation
    by s^-1), so reachable states are exactly the conjugates of the core by
    the rotation words. Returns {NormalForm: conjugator d} with
    d * core * d^-1 equal to the state. The search is shortest-path in total
    rotated syllable length and insertion order breaks ties, which makes
    both the map contents and the chosen conjugators deterministic and the
    conjugators short. Raises BfsLimitExceeded past `limit` settled states.
    """
    core = check_word(spec, core)
    if not is_graphically_cyclically_reduced(spec, core):
        raise NotCyclicallyReduced("shuffle class needs a cyclically reduced core")
    if limit is None:
        limit = spec.limit("states")

    start = canonical_form(spec, core)
    out: dict[NormalForm, Word] = {}
    counter = 0
    heap = [(0, counter, start.word, ())]  # (weight, tiebreak, word, rotation)
    seen_best: dict[NormalForm, int] = {start: 0}
    while heap:
        weight, _, wordt, rotation = heapq.heappop(heap)
        nf = NormalForm(wordt)
        if nf in out:
            continue
        out[nf] = invert_word(spec, rotation)
        if len(out) > limit:
            raise BfsLimitExceeded(f"cyclic shuffle class exceeded {limit} states")
        for p in range(len(wordt)):
            if not _front_shuffleable(spec, wordt, p):
                continue
            s = wordt[p]
            rotated = wordt[:p] + wordt[p + 1 :] + (s,)
            nxt = canonical_form(spec, rotated)
            w2 = weight + spec.groups[s.vertex].element_length(s.elem)
            if nxt in out:
                continue
            if nxt not in seen_best or w2 < seen_best[nxt]:
                seen_best[nxt] = w2
                counter += 1
                heapq.heappush(heap, (w2, counter, nxt.word, rotation + (s,)))
    return out


# ---------------------------------------------------------------------------
# the decision procedure


def clf_upper_bound(spec: GroupSpec, n: int) -> int:
    """Conjugacy length function bound: any two conjugate words with total
    length n admit a conjugator no longer than this."""
    d = opposite_diameter(spec.graph)
    local = 0
    for clique in enumerate_cliques(spec.graph):
        local = max(local, sum(spec.groups[u].local_clf(n) for u in clique))
    return (d + 1) * n + local


def _witness_bound(spec: GroupSpec, n: int, float_vertices) -> int:
    d = opposite_diameter(spec.graph)
    return (d + 1) * n + sum(spec.groups[u].local_clf(n) for u in float_vertices)


def are_conjugate(spec: GroupSpec, a, b, limit=None):
    """Decide conjugacy; on success return a certified ConjugacyWitness.

    The witness word is h d k_1..k_m g^-1 where g, h are the cyclic
    reduction conjugators of a and b, d carries the x-part of a to the
    x-part of b through swaps and rotations, and each k_u conjugates the
    float of a at u to the float of b at u inside that vertex group. The
    bound field is (D+1)(|a|+|b|) plus the local conjugacy length terms of
    the floating vertices, D being the largest opposite-component diameter.
    """
    ra = cyclically_reduce(spec, a)
    rb = cyclically_reduce(spec, b)
    fa = floating_decomposition(spec, ra.core)
    fb = floating_decomposition(spec, rb.core)

    n = word_length(spec, a) + word_length(spec, b)
    fverts = tuple(s.vertex for s in fa.floats)
    if fverts != tuple(s.vertex for s in fb.floats):
        return None
    bound = _witness_bound(spec, n, fverts)

    local = []
    for sa, sb in zip(fa.floats, fb.floats):
        k = spec.groups[sa.vertex].conjugacy_witness(sa.elem, sb.elem)
        if k is None:
            return None
        if not spec.groups[sa.vertex].is_identity(k):
            local.append(Syllable(sa.vertex, k))

    # cheap invariant: swaps and rotations preserve the syllable multiset
    key_a = sorted((s.vertex, spec.groups[s.vertex].key(s.elem)) for s in fa.x_part)
    key_b = sorted((s.vertex, spec.groups[s.vertex].key(s.elem)) for s in fb.x_part)
    if key_a != key_b:
        return None

    states = cyclic_shuffle_class(spec, fa.x_part, limit)
    target = canonical_form(spec, fb.x_part)
    if target not in states:
        return None
    d = states[target]

    witness = reduce(
        spec,
        rb.conjugator + d + tuple(local) + invert_word(spec, ra.conjugator),
    )
    return ConjugacyWitness(
        conjugator=witness,
        bound=bound,
        floating=tuple(spec.vertices[v] for v in fverts),
        core_a=ra.core,
        core_b=rb.core,
    )


def verify_witness(spec: GroupSpec, a, b, conjugator) -> bool:
    """Check c a c^-1 = b with the word-problem machinery only."""
    c = check_word(spec, conjugator)
    return equal(spec, c + check_word(spec, a) + invert_word(spec, c), b)
