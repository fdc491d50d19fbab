"""Independent brute-force checks for the word and conjugacy machinery.

Nothing here trusts reduction or canonical forms (except one documented,
warning-emitting fallback). Equality is decided by intersecting rewrite
closures: the closure of a word under identity deletion, adjacent swaps on
adjacent vertices, and merges of consecutive same-vertex syllables contains
every reduced representative, so two words are equal exactly when their
closures meet. Conjugacy and length questions go through explicit Cayley
balls built letter by letter.
"""

from __future__ import annotations

import warnings
from collections import deque
from weakref import WeakKeyDictionary

from .conjugacy import clf_upper_bound
from .errors import CapExceeded, GraphProductError
from .specfile import GroupSpec
from .words import Syllable, Word, check_word

_memo: "WeakKeyDictionary[GroupSpec, dict]" = WeakKeyDictionary()


def _closure_moves(spec: GroupSpec, w: Word):
    for i, s in enumerate(w):
        if spec.groups[s.vertex].is_identity(s.elem):
            yield w[:i] + w[i + 1 :]
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a.vertex == b.vertex:
            g = spec.groups[a.vertex].compose(a.elem, b.elem)
            if spec.groups[a.vertex].is_identity(g):
                yield w[:i] + w[i + 2 :]
            else:
                yield w[:i] + (Syllable(a.vertex, g),) + w[i + 2 :]
        elif spec.graph.adjacent(a.vertex, b.vertex):
            yield w[:i] + (b, a) + w[i + 2 :]


def rewrite_closure(spec: GroupSpec, word, cap=None) -> frozenset:
    """Every word reachable by the three moves (the input included)."""
    word = check_word(spec, word)
    if cap is None:
        cap = spec.limit("oracle-cap")
    if len(word) > cap:
        raise CapExceeded(f"word has {len(word)} syllables, oracle cap is {cap}")
    memo = _memo.setdefault(spec, {})
    if word in memo:
        return memo[word]
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for nxt in _closure_moves(spec, w):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    result = frozenset(seen)
    memo[word] = result
    return result


def oracle_equal(spec: GroupSpec, w1, w2, cap=None) -> bool:
    """Ground-truth word problem by closure intersection."""
    return not rewrite_closure(spec, w1, cap).isdisjoint(rewrite_closure(spec, w2, cap))


# ---------------------------------------------------------------------------
# Cayley balls


def word_letters(spec: GroupSpec, word) -> tuple:
    """Spell a word as single-generator syllables (a geodesic per syllable)."""
    word = check_word(spec, word)
    out = []
    for v, g in word:
        out.extend(Syllable(v, l) for l in spec.groups[v].letters(g))
    return tuple(out)


class CayleyBall:
    """Breadth-first ball in the Cayley graph over all vertex generators.

    Elements are stored as the geodesic letter words that discovered them,
    `dist` holds the shell, and `trans` is the partial step table (element
    index, letter index) -> element index. Deduplication is honest (pairwise
    rewrite-closure equality) up to `honest_radius`; past that the builder
    falls back to canonical forms and says so with a warning, as the larger
    acceptance radii would be hopeless otherwise.
    """

    def __init__(self, spec: GroupSpec, radius: int, dedupe="auto",
                 honest_radius=5, cap=None):
        self.spec = spec
        self.radius = radius
        self.letters = tuple(
            Syllable(v, p)
            for v in range(spec.graph.n)
            for p in spec.groups[v].generator_letters()
        )
        self.letter_index = {s: i for i, s in enumerate(self.letters)}
        if dedupe == "auto":
            dedupe = "honest" if radius <= honest_radius else "canonical"
            if dedupe == "canonical":
                warnings.warn(
                    f"Cayley ball at radius {radius}: deduplicating via canonical "
                    "forms instead of pairwise closure comparison",
                    stacklevel=2,
                )
        if dedupe not in ("honest", "canonical"):
            raise GraphProductError(f"unknown dedupe mode {dedupe!r}")
        self.dedupe = dedupe
        self._cap = max(radius + 1, cap if cap is not None else spec.limit("oracle-cap"))

        self.reps: list[Word] = [()]
        self.dist: list[int] = [0]
        self.trans: list[dict[int, int]] = [{}]
        lookup = None
        if dedupe == "canonical":
            from .words import canonical_form

            self._canon = lambda w: canonical_form(spec, w)
            lookup = {self._canon(()): 0}

        queue = deque([0])
        while queue:
            i = queue.popleft()
            here = self.dist[i]
            for li in range(len(self.letters)):
                cand = self.reps[i] + (self.letters[li],)
                j = self._find(cand, here, lookup)
                if j is None:
                    if here + 1 > radius:
                        continue
                    j = len(self.reps)
                    self.reps.append(cand)
                    self.dist.append(here + 1)
                    self.trans.append({})
                    if lookup is not None:
                        lookup[self._canon(cand)] = j
                    queue.append(j)
                self.trans[i][li] = j

    def _find(self, cand: Word, src_dist: int, lookup):
        if lookup is not None:
            return lookup.get(self._canon(cand))
        cset = rewrite_closure(self.spec, cand, self._cap)
        for k, rep in enumerate(self.reps):
            # one letter moves distance by at most 1, so cand can only match
            # reps within one shell of its source
            if abs(self.dist[k] - src_dist) > 1:
                continue
            if rep in cset or not cset.isdisjoint(
                rewrite_closure(self.spec, rep, self._cap)
            ):
                return k
        return None

    def __len__(self):
        return len(self.reps)

    def walk(self, start: int, syllables) -> int:
        """Right-multiply element `start` by a letter sequence."""
        i = start
        for s in syllables:
            li = self.letter_index.get(s)
            if li is None:
                raise GraphProductError(f"{s!r} is not a generator letter")
            step = self.trans[i].get(li)
            if step is None:
                raise GraphProductError("walk left the ball; radius too small")
            i = step
        return i

    def locate(self, spec_word) -> int:
        """Index of the element a word represents."""
        return self.walk(0, word_letters(self.spec, spec_word))


def _inverse_letters(spec: GroupSpec, letters) -> tuple:
    return tuple(
        Syllable(v, spec.groups[v].invert(g)) for v, g in reversed(letters)
    )


def oracle_conjugate(spec: GroupSpec, a, b, radius: int, ball: CayleyBall | None = None):
    """Search every ball element c with |c| <= radius for c a c^-1 = b.

    Returns the first witness in shell order (a letter word, so its length
    is its distance) or None. Meant for finite vertex groups, where a large
    enough radius makes the search complete.
    """
    a = check_word(spec, a)
    b = check_word(spec, b)
    la = word_letters(spec, a)
    lb = word_letters(spec, b)
    need = max(2 * radius + len(la), len(lb))
    if ball is None or ball.radius < need or ball.spec is not spec:
        ball = CayleyBall(spec, need)
    ib = ball.walk(0, lb)
    for c in range(len(ball.reps)):
        if ball.dist[c] > radius:
            break
        end = ball.walk(ball.walk(c, la), _inverse_letters(spec, ball.reps[c]))
        if end == ib:
            return ball.reps[c]
    return None


def empirical_clf(spec: GroupSpec, n: int, cap: int = 6):
    """Observed conjugacy length function at argument n.

    Enumerates all pairs of ball elements with |x| + |y| <= n, finds the
    shortest conjugator within the certified radius for each conjugate
    pair, and returns the worst. Refuses n beyond `cap`.
    """
    if n > cap:
        raise CapExceeded(f"empirical_clf asked for n={n}, cap is {cap}")
    radius = clf_upper_bound(spec, n)
    ball = CayleyBall(spec, max(2 * radius + n, n))
    small = [i for i in range(len(ball.reps)) if ball.dist[i] <= n]
    inv = {c: _inverse_letters(spec, ball.reps[c]) for c in range(len(ball.reps))
           if ball.dist[c] <= radius}
    worst = 0
    for xi in range(len(small)):
        x = small[xi]
        for y in small[xi:]:
            if ball.dist[x] + ball.dist[y] > n:
                continue
            for c in range(len(ball.reps)):
                if ball.dist[c] > radius:
                    break
                if ball.walk(ball.walk(c, ball.reps[x]), inv[c]) == y:
                    worst = max(worst, ball.dist[c])
                    break
    return worst
