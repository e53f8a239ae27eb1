"""Exhaustive ground truths for small alphabets.

Nothing here calls the shortener or the forbidden-pattern test except where a
result is explicitly produced from them (``min_bad_labeling``). The word
searches work straight from the adjacency definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional

from twelverep.errors import BudgetExceeded, NotRepresentable
from twelverep.graph import LabeledGraph, bad_count, find_forbidden_pattern
from twelverep.shortener import shorten
from twelverep.words import Word, decode, format_word, verify

WORD_SEARCH_MAX_N = 5
PERMUTATION_MAX_N = 8
LABELING_MAX_N = 8
ENUMERATION_MAX_N = 5


@dataclass(frozen=True)
class SearchBudget:
    """Caps on search size.

    ``max_n`` defaults to the per-search limit. Raising it beyond that limit
    needs ``acknowledge_slow=True``.
    """

    max_n: Optional[int] = None
    max_words: Optional[int] = None
    acknowledge_slow: bool = False

    def check(self, n: int, default_cap: int) -> None:
        cap = default_cap if self.max_n is None else self.max_n
        if cap > default_cap and not self.acknowledge_slow:
            raise BudgetExceeded(
                f"max_n={cap} exceeds the default cap {default_cap}; pass acknowledge_slow to proceed"
            )
        if n > cap:
            raise BudgetExceeded(f"n={n} exceeds max_n={cap}")


DEFAULT_BUDGET = SearchBudget()


@dataclass
class SearchStats:
    words_checked: int = 0
    max_words: Optional[int] = field(default=None, repr=False)

    def tick(self) -> None:
        self.words_checked += 1
        if self.max_words is not None and self.words_checked > self.max_words:
            raise BudgetExceeded(f"search visited more than {self.max_words} words")

    def to_dict(self) -> dict:
        return {"words_checked": self.words_checked}


def _stats(stats: Optional[SearchStats], budget: SearchBudget) -> SearchStats:
    if stats is None:
        stats = SearchStats()
    stats.max_words = budget.max_words
    return stats


def _search_length(g: LabeledGraph, length: int, stats: SearchStats) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest word of the given length, each letter once or twice, representing g.

    Depth-first over positions, letters ascending. Per letter the state is
    unplaced / open (one copy down, one to come) / closed (all copies down).
    For i < j: an edge forbids placing i while j is not closed and forbids
    placing j after any i; a non-edge requires some i before the final j.
    Together these are exactly "i, j adjacent iff last(j) < first(i)".
    """
    n = g.n
    adj = g.adjacent
    edge_above = [[j for j in range(i + 1, n + 1) if adj(i, j)] for i in range(n + 1)]
    edge_below = [[i for i in range(1, j) if adj(i, j)] for j in range(n + 1)]
    nonedge_below = [[i for i in range(1, j) if not adj(i, j)] for j in range(n + 1)]

    placed = [0] * (n + 1)
    closed = [False] * (n + 1)
    unplaced = n
    open_ = 0

    def place_ok(x: int, final: bool) -> bool:
        for j in edge_above[x]:
            if not closed[j]:
                return False
        for i in edge_below[x]:
            if placed[i]:
                return False
        if final:
            for i in nonedge_below[x]:
                if not placed[i]:
                    return False
        return True

    def dfs(remaining: int) -> Optional[tuple[int, ...]]:
        nonlocal unplaced, open_
        if remaining == 0:
            return () if unplaced == 0 and open_ == 0 else None
        for x in range(1, n + 1):
            if closed[x]:
                continue
            # a first copy may be the only one or be followed by a second; both
            # branches share the prefix, so the smaller of their results wins
            best: Optional[tuple[int, ...]] = None
            for final in ((True, False) if placed[x] == 0 else (True,)):
                du = -1 if placed[x] == 0 else 0
                do = (0 if final else 1) if placed[x] == 0 else -1
                u2, o2, r2 = unplaced + du, open_ + do, remaining - 1
                if not (u2 + o2 <= r2 <= 2 * u2 + o2):
                    continue
                if not place_ok(x, final):
                    continue
                stats.tick()
                placed[x] += 1
                closed[x] = final
                unplaced, open_ = u2, o2
                rest = dfs(r2)
                placed[x] -= 1
                closed[x] = False
                unplaced, open_ = u2 - du, o2 - do
                if rest is not None and (best is None or rest < best):
                    best = rest
            if best is not None:
                return (x, *best)
        return None

    return dfs(length)


def representant_of_length(
    g: LabeledGraph,
    length: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    stats: Optional[SearchStats] = None,
) -> Optional[Word]:
    """Smallest representing word of exactly ``length`` letters (each letter at most twice), if any."""
    budget.check(g.n, WORD_SEARCH_MAX_N)
    stats = _stats(stats, budget)
    if not g.n <= length <= 2 * g.n:
        return None
    found = _search_length(g, length, stats)
    return None if found is None else Word(found, g.n)


def brute_force_shortest(
    g: LabeledGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
    stats: Optional[SearchStats] = None,
) -> Optional[Word]:
    """Shortest representant, scanning lengths n..2n; lexicographically smallest among ties."""
    budget.check(g.n, WORD_SEARCH_MAX_N)
    stats = _stats(stats, budget)
    for length in range(g.n, 2 * g.n + 1):
        found = _search_length(g, length, stats)
        if found is not None:
            return Word(found, g.n)
    return None


def is_representable(g: LabeledGraph, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    budget.check(g.n, WORD_SEARCH_MAX_N)
    return brute_force_shortest(g, budget) is not None


def iter_candidate_words(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """Every word over [n] of the given length using each letter once or twice, unpruned.

    Occurrence profiles (the set of doubled letters) are chosen first, then
    the distinct arrangements of the resulting multiset.
    """
    extra = length - n
    if not 0 <= extra <= n:
        return
    for doubled in combinations(range(1, n + 1), extra):
        multiset = sorted(list(range(1, n + 1)) + list(doubled))
        yield from _distinct_permutations(multiset)


def _distinct_permutations(items: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out: list[int] = []
    total = len(items)

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == total:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def enumerate_shortest(g: LabeledGraph, max_length: Optional[int] = None) -> Optional[Word]:
    """Plain generate-and-decode scan; slow, used to cross-check the pruned search at tiny n."""
    if g.n > 4:
        raise BudgetExceeded("unpruned enumeration is limited to n <= 4")
    top = 2 * g.n if max_length is None else min(max_length, 2 * g.n)
    for length in range(g.n, top + 1):
        hits = [w for w in iter_candidate_words(g.n, length) if decode(Word(w, g.n)).edges == g.edges]
        if hits:
            return Word(min(hits), g.n)
    return None


def is_permutation_representable(
    g: LabeledGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
    stats: Optional[SearchStats] = None,
) -> Optional[Word]:
    """First permutation word (lexicographic order) representing g, or None after trying all n!."""
    budget.check(g.n, PERMUTATION_MAX_N)
    stats = _stats(stats, budget)
    n = g.n
    adj = g.adjacent
    pairs = [(i, j, adj(i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pos = [0] * (n + 1)
    for perm in permutations(range(1, n + 1)):
        stats.tick()
        for p, x in enumerate(perm):
            pos[x] = p
        # in a permutation, i < j are adjacent iff j comes before i
        if all((pos[j] < pos[i]) == e for i, j, e in pairs):
            return Word(perm, n)
    return None


@dataclass(frozen=True)
class LabelingResult:
    """``labeling[v - 1]`` is the new label of vertex ``v``."""

    labeling: tuple[int, ...]
    bad_count: int
    representant: Word
    graph: LabeledGraph

    def to_dict(self) -> dict:
        return {
            "labeling": list(self.labeling),
            "bad_count": self.bad_count,
            "representant": format_word(self.representant),
            "length": len(self.representant),
            "graph": self.graph.to_dict(),
        }


RepresentantSupplier = Callable[[LabeledGraph], Optional[Word]]


def min_bad_labeling(
    g: LabeledGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
    representant_for: Optional[RepresentantSupplier] = None,
    brute_force_fallback: bool = True,
    stats: Optional[SearchStats] = None,
) -> LabelingResult:
    """Valid labeling of g's underlying structure with the fewest bad vertices.

    All n! labelings are scanned in lexicographic order; the first one with
    the minimum bad count wins. A representant is produced for the winner
    only: by ``brute_force_shortest`` when n <= 5 and the fallback is enabled,
    otherwise by shortening the word returned from ``representant_for``.
    """
    budget.check(g.n, LABELING_MAX_N)
    stats = _stats(stats, budget)
    best: Optional[tuple[int, tuple[int, ...], LabeledGraph]] = None
    for labeling in permutations(range(1, g.n + 1)):
        stats.tick()
        h = g.relabel(labeling)
        if find_forbidden_pattern(h) is not None:
            continue
        b = bad_count(h)
        if best is None or b < best[0]:
            best = (b, labeling, h)
            if b == 0:
                break
    if best is None:
        raise NotRepresentable("no labeling avoids the forbidden patterns")
    b, labeling, h = best

    if brute_force_fallback and h.n <= WORD_SEARCH_MAX_N:
        rep = brute_force_shortest(h, SearchBudget())
    else:
        if representant_for is None:
            raise BudgetExceeded(
                f"n={h.n} needs a representant supplier (brute-force fallback only covers n <= {WORD_SEARCH_MAX_N})"
            )
        supplied = representant_for(h)
        if supplied is None or not verify(supplied, h):
            raise NotRepresentable("supplied word does not represent the winning labeling")
        rep = shorten(supplied)
    if rep is None:
        raise NotRepresentable("winning labeling has no representant")
    return LabelingResult(labeling, b, rep, h)


def enumerate_labeled_graphs(n: int) -> Iterator[LabeledGraph]:
    """All 2^(n(n-1)/2) labeled graphs on [n]; bit k of the counter selects the k-th pair in lexicographic order."""
    if n < 1:
        raise BudgetExceeded(f"n must be positive, got {n}")
    if n > ENUMERATION_MAX_N:
        raise BudgetExceeded(f"n={n} exceeds enumeration cap {ENUMERATION_MAX_N}")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
