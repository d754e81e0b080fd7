"""Schubert and Grothendieck polynomial constructors.

Two independent routes to the same polynomials:

- the classical recursions, descending the weak order from the longest
  element with divided-difference (Schubert) or isobaric (Grothendieck)
  operators, memoized per rank;
- the ascending operator formulas driven by the orthodontic sequence of
  the Rothe diagram, with Demazure operators for Schubert polynomials and
  Demazure-Lascoux operators for Grothendieck polynomials.

The two routes agree; the verification suites check this exhaustively at
small rank.  The module also carries the sorting machinery (primary
column data, the dominant projection, the unsorting monomial factor),
the transition expansion of x_j * G_w, fallen boxes, and the step
relation of the orthodontic sort order.

The memo caches are plain dicts keyed by one-line words.  Entries are
only ever written once with the final value, so concurrent readers are
safe; a worker racing another may duplicate a computation but never sees
a torn value.
"""

from __future__ import annotations

from dataclasses import dataclass

from orthodontia.diagram import (
    Diagram,
    diagram_monomial,
    missing_tooth,
    orthodontia,
    rothe_diagram,
)
from orthodontia.operators import demazure, demazure_lascoux, divided_difference, isobaric
from orthodontia.permutation import Permutation, symmetric_group
from orthodontia.polynomial import Monomial, Polynomial


class RankOverflowError(ValueError):
    """A transition chain left S_n; the caller must re-embed w in a larger rank."""


_SCHUBERT_CACHE: dict[tuple[int, ...], Polynomial] = {}
_GROTH_CACHE: dict[tuple[int, ...], Polynomial] = {}


def _first_ascent(w: Permutation) -> int | None:
    word = w.word
    for j in range(1, w.n):
        if word[j - 1] < word[j]:
            return j
    return None


def _staircase(n: int) -> Polynomial:
    return Polynomial.monomial(tuple(n - k for k in range(1, n + 1)))


def schubert_recursive(w: Permutation) -> Polynomial:
    """The Schubert polynomial, by divided differences down from the staircase."""
    cached = _SCHUBERT_CACHE.get(w.word)
    if cached is not None:
        return cached
    j = _first_ascent(w)
    if j is None:
        poly = _staircase(w.n)
    else:
        poly = divided_difference(j, schubert_recursive(w.right_multiply_adjacent(j)))
    _SCHUBERT_CACHE[w.word] = poly
    return poly


def grothendieck_recursive(w: Permutation) -> Polynomial:
    """The Grothendieck polynomial, by isobaric operators down from the staircase.

    Its lowest-degree homogeneous component is the Schubert polynomial.
    """
    cached = _GROTH_CACHE.get(w.word)
    if cached is not None:
        return cached
    j = _first_ascent(w)
    if j is None:
        poly = _staircase(w.n)
    else:
        poly = isobaric(j, grothendieck_recursive(w.right_multiply_adjacent(j)))
    _GROTH_CACHE[w.word] = poly
    return poly


def warm_caches(n: int) -> None:
    """Precompute both polynomial tables for all of S_n.

    Useful before forking verification workers: children inherit the
    filled caches instead of rebuilding them.
    """
    for w in symmetric_group(n):
        schubert_recursive(w)
        grothendieck_recursive(w)


def _weight_exps(j: int, n: int, power: int) -> Monomial:
    return (power,) * j + (0,) * (n - j)


def _evaluate_formula(D: Diagram, op) -> Polynomial:
    seq = orthodontia(D)
    n = D.n
    f = Polynomial.one(n)
    for tooth, mult in zip(reversed(seq.teeth), reversed(seq.tooth_multiplicities)):
        if mult:
            f = f.mul_monomial(_weight_exps(tooth, n, mult))
        f = op(tooth, f)
    # prefix of interval-column weights collapses to a single monomial
    suffix_sums = [0] * n
    running = 0
    for j in range(n, 0, -1):
        running += seq.interval_multiplicities[j - 1]
        suffix_sums[j - 1] = running
    return f.mul_monomial(tuple(suffix_sums))


def orthodontia_schubert(D: Diagram) -> Polynomial:
    """Evaluate the ascending Demazure-operator formula on a diagram.

    On Rothe diagrams this equals :func:`schubert_recursive`.  D must be
    strongly separated with its columns already ordered (see
    :func:`orthodontia.diagram.sort_columns`).
    """
    return _evaluate_formula(D, demazure)


def orthodontia_grothendieck(D: Diagram) -> Polynomial:
    """Evaluate the ascending Demazure-Lascoux formula on a diagram.

    On Rothe diagrams this equals :func:`grothendieck_recursive`.
    """
    return _evaluate_formula(D, demazure_lascoux)


def is_dominant(w: Permutation) -> bool:
    """True iff w avoids the pattern 132, iff its diagram columns are all intervals."""
    word = w.word
    n = w.n
    for i in range(n):
        for j in range(i + 1, n):
            if word[j] <= word[i]:
                continue
            for k in range(j + 1, n):
                if word[i] < word[k] < word[j]:
                    return False
    return True


def dominant_grothendieck(w: Permutation) -> Polynomial:
    """For dominant w the Grothendieck polynomial is the single diagram monomial."""
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    return Polynomial.monomial(diagram_monomial(rothe_diagram(w)))


@dataclass(frozen=True)
class PrimaryColumnData:
    """Shape data of the first non-interval column of the Rothe diagram.

    ``standard_cols``: number of leading columns that are standard
        intervals (equals n when w is dominant).
    ``column``: the first non-interval column (empty when dominant).
    ``prefix``: largest p with {1..p} contained in that column.
    ``tooth``: its smallest missing tooth (n when dominant).
    ``gap``: tooth - prefix, the size of the uppermost gap.
    """

    standard_cols: int
    column: frozenset[int]
    prefix: int
    tooth: int
    gap: int


def primary_column_data(w: Permutation) -> PrimaryColumnData:
    n = w.n
    D = rothe_diagram(w)
    for idx, c in enumerate(D.columns):
        if not c:
            continue
        if c == frozenset(range(1, len(c) + 1)):
            continue
        prefix = 0
        while prefix + 1 in c:
            prefix += 1
        tooth = missing_tooth(c)
        assert tooth is not None and tooth > prefix
        assert not any(i in c for i in range(prefix + 1, tooth + 1))
        assert tooth + 1 in c
        return PrimaryColumnData(idx, c, prefix, tooth, tooth - prefix)
    return PrimaryColumnData(n, frozenset(), 0, n, n)


def sigma(w: Permutation) -> Permutation:
    """The pattern of w on positions prefix+1..tooth, a dominant permutation.

    w restricts to a bijection from those positions onto an interval of
    values; shifting the values down gives an element of S_gap.  For
    dominant w the restriction is all of w, so sigma(w) = w.  w is called
    sorted when sigma(w) is the identity.
    """
    data = primary_column_data(w)
    shift = data.standard_cols - data.gap
    values = [w(p) - shift for p in range(data.prefix + 1, data.tooth + 1)]
    if sorted(values) != list(range(1, data.gap + 1)):
        raise AssertionError(
            f"restriction of {w} to positions {data.prefix + 1}..{data.tooth} "
            "is not a bijection onto an interval"
        )
    return Permutation(tuple(values))


def is_sorted_permutation(w: Permutation) -> bool:
    """True iff the entries on positions prefix+1..tooth already increase."""
    data = primary_column_data(w)
    word = w.word[data.prefix : data.tooth]
    return all(a < b for a, b in zip(word, word[1:]))


def sort_permutation(w: Permutation) -> Permutation:
    """Reorder the entries on positions prefix+1..tooth to increase.

    Idempotent; preserves primary column data; maps dominant permutations
    to the identity.
    """
    data = primary_column_data(w)
    word = list(w.word)
    word[data.prefix : data.tooth] = sorted(word[data.prefix : data.tooth])
    return Permutation(tuple(word))


def unsort_factor(w: Permutation) -> Monomial:
    """The monomial with G_w = x^factor * G_{sort(w)}.

    Exponents come from the row lengths of the diagram of sigma(w),
    placed on the variables x_{prefix+1}..x_{tooth}.  Sorted input gives
    the constant monomial.
    """
    data = primary_column_data(w)
    shape = rothe_diagram(sigma(w))
    rows = [0] * data.gap
    for i, _ in shape.boxes():
        rows[i - 1] += 1
    exps = [0] * w.n
    for r, count in enumerate(rows):
        exps[data.prefix + r] = count
    return tuple(exps)


@dataclass(frozen=True)
class MonkTerm:
    """One summand of the transition expansion of x_j * G_w."""

    target: Permutation
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")


def _swap_positions(word: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    lst = list(word)
    lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
    return tuple(lst)


def _covers(word: tuple[int, ...], x: int, y: int) -> bool:
    # swapping positions x < y raises the length by exactly 1
    wx, wy = word[x - 1], word[y - 1]
    if wx >= wy:
        return False
    return all(not wx < word[p - 1] < wy for p in range(x + 1, y))


def monk_terms(j: int, w: Permutation) -> tuple[MonkTerm, ...]:
    """The signed targets v with x_j * G_w = sum of sign * G_v.

    Each v arises from w by a chain of position swaps with j: first swaps
    with positions below j (taken in decreasing order), then swaps with
    positions above j (also decreasing), at least one swap in total, each
    raising the length by exactly 1.  The sign is -1 when the number of
    above-j swaps is even, +1 when odd.

    The chains are enumerated inside S_{n+1}; if any chain escapes S_n
    the whole expansion needs a larger ambient rank and
    :class:`RankOverflowError` is raised rather than truncating.
    """
    n = w.n
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} out of range for rank {n}")
    root = w.word + (n + 1,)
    found: dict[tuple[int, ...], int] = {}

    def record(word: tuple[int, ...], above_swaps: int) -> None:
        sign = 1 if above_swaps % 2 == 1 else -1
        prior = found.get(word)
        if prior is not None and prior != sign:
            raise AssertionError(f"conflicting signs for target {word[:n]}")
        found[word] = sign

    def extend_above(word: tuple[int, ...], cap: int, above_swaps: int) -> None:
        for b in range(cap, j, -1):
            if _covers(word, j, b):
                nxt = _swap_positions(word, j, b)
                record(nxt, above_swaps + 1)
                extend_above(nxt, b - 1, above_swaps + 1)

    def extend_below(word: tuple[int, ...], cap: int) -> None:
        extend_above(word, n + 1, 0)
        for a in range(cap, 0, -1):
            if _covers(word, a, j):
                nxt = _swap_positions(word, a, j)
                record(nxt, 0)
                extend_below(nxt, a - 1)

    extend_below(root, j - 1)

    overflow = [word for word in found if word[n] != n + 1]
    if overflow:
        samples = ", ".join(str(word[:n]) for word in sorted(overflow)[:3])
        raise RankOverflowError(
            f"expansion of x_{j} * G_w for w={w} leaves S_{n} (e.g. via {samples})"
        )
    return tuple(
        MonkTerm(Permutation(word[:n]), sign) for word, sign in sorted(found.items())
    )


def fallen_boxes(w: Permutation) -> frozenset[tuple[int, int]]:
    """Boxes of the diagram that sit below their top-aligned position.

    A box is fallen when its row index exceeds its rank within the
    column, i.e. some earlier row of the column is empty.  Dominant
    permutations have none.
    """
    fallen = set()
    for j, c in enumerate(rothe_diagram(w).columns, start=1):
        for rank, i in enumerate(sorted(c), start=1):
            if i > rank:
                fallen.add((i, j))
    return frozenset(fallen)


def os_predecessor(w: Permutation) -> Permutation:
    """One step down in the orthodontic sort order.

    Unsorted w steps to sort(w); sorted nonidentity w steps to
    w * s_tooth * ... * s_{prefix+1}, which lies above w in the weak
    order but strictly drops the number of fallen boxes.  Iterating
    always reaches the identity.
    """
    if w.is_identity():
        raise ValueError("the identity has no predecessor")
    if not is_sorted_permutation(w):
        return sort_permutation(w)
    data = primary_column_data(w)
    u = w
    for pos in range(data.tooth, data.prefix, -1):
        u = u.right_multiply_adjacent(pos)
    return u
