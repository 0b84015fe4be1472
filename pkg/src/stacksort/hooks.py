"""Hook configurations on word plots and exact preimage counting.

Plot the word w as points (i, w_i).  A hook joins a southwest point (i, w_i)
to a weakly higher northeast point (j, w_j) to its right by a vertical then a
horizontal segment.  A configuration (H_1, ..., H_k), ordered by southwest
index, is valid when:

  1. the southwest indices strictly increase;
  2. every descent top (w_d >= w_{d+1}) is the southwest endpoint of a hook;
  3. every northeast endpoint is the northeast endpoint of both a descent
     hook (southwest at a descent) and a small hook (adjacent indices),
     possibly the same hook;
  4. the open index intervals of the hooks are pairwise nested or disjoint.

Each point then looks straight up and is colored by the covering-or-ending
hook whose southwest endpoint is rightmost (sky color 0 if none); a hook
covers a point only when the point lies strictly below its horizontal
segment, and a hook's own endpoints never count as below it.  The color-class
sizes form a composition q, and summing the products of Catalan numbers C_q
over the filtered families (binary configurations with, for the fast
operator, all horizontal hooks small; for the slow operator, no small
horizontal hook sharing its northeast endpoint) counts the preimages of w
exactly.  `build_preimage_trees` upgrades the count to a bijection: it
reconstructs, per configuration, the actual trees whose postorder is w, whose
in-order readings are the preimages themselves.

Enumeration is depth-first over the indices, deciding at each index whether
it starts a hook and where the hook ends, pruning on interval crossings,
points that would be passed strictly below, and condition-3 obligations that
can no longer be met.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator

from .sorting import SortVariant, sort_via_stack
from .trees import PlaneTree, in_order
from .words import (
    DomainError,
    SizeLimitError,
    Word,
    content,
    enumerate_words,
    word_space_size,
)

PlotPoint = tuple[int, int]
Composition = tuple[int, ...]

MAX_VHC_LEN = 12
MAX_SPACE = 2_000_000


@dataclass(frozen=True)
class Hook:
    """A hook with its southwest and northeast plot points (1-based index, height)."""

    sw: PlotPoint
    ne: PlotPoint

    @property
    def horizontal(self) -> bool:
        return self.sw[1] == self.ne[1]

    @property
    def small(self) -> bool:
        return self.ne[0] == self.sw[0] + 1


HookConfig = tuple[Hook, ...]


class VhcFilter(Enum):
    """Which family to enumerate: all valid configurations, the binary ones,
    or the binary families counting fast (R) and slow (L) preimages."""

    ALL = "all"
    BINARY = "binary"
    R = "R"
    L = "L"


def filter_for(variant: SortVariant) -> VhcFilter:
    return VhcFilter.R if variant is SortVariant.FAST else VhcFilter.L


def descent_tops(w: Word) -> tuple[PlotPoint, ...]:
    """Points (d, w_d) with w_d >= w_{d+1}; descents are weak."""
    return tuple((d, w[d - 1]) for d in range(1, len(w)) if w[d - 1] >= w[d])


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("Catalan numbers need n >= 0")
    return comb(2 * n, n) // (n + 1)


def catalan_product(q: Composition) -> int:
    out = 1
    for part in q:
        out *= catalan(part)
    return out


# ---------------------------------------------------------------------------
# Enumeration


def _enumerate_pairs(w: Word, which: VhcFilter) -> list[tuple[tuple[int, int], ...]]:
    """All configurations as ((i, j), ...) index pairs, in DFS order."""
    m = len(w)
    descents = {d for d in range(1, m) if w[d - 1] >= w[d]}
    bounded = which is not VhcFilter.ALL

    results: list[tuple[tuple[int, int], ...]] = []
    hooks: list[tuple[int, int]] = []
    # ne endpoint j -> [hook count, has descent hook, has small hook, blocked]
    ne_state: dict[int, list] = {}

    def candidates(i: int) -> list[int]:
        out = []
        hi = w[i - 1]
        for j in range(i + 1, m + 1):
            hj = w[j - 1]
            if hj < hi:
                continue
            # A hook may not pass strictly below a point at i < a < j.
            if any(x > hj for x in w[i:j - 1]):
                continue
            # Condition 4: no crossing with an already placed hook.
            if any(i < jj < j for _, jj in hooks):
                continue
            st = ne_state.get(j)
            count = st[0] if st else 0
            if bounded and count >= 2:
                continue
            horizontal = hi == hj
            small = j == i + 1
            if which is VhcFilter.R and horizontal and not small:
                continue
            if which is VhcFilter.L:
                if st and st[3]:
                    continue  # a small horizontal hook already owns this endpoint
                if small and horizontal and count:
                    continue
            # Condition 3 must stay satisfiable for j.
            if not ((st and st[1]) or i in descents):
                if not any(d in descents and w[d - 1] <= hj for d in range(i + 1, j)):
                    continue
            if not ((st and st[2]) or small):
                if w[j - 2] > hj:
                    continue  # the only possible small hook (j-1, j) is illegal
            out.append(j)
        return out

    def visit(i: int) -> None:
        if i > m:
            results.append(tuple(hooks))
            return
        st = ne_state.get(i)
        if st and st[0] and not (st[1] and st[2]):
            return  # condition 3 failed at a finished northeast endpoint
        if i == m:
            visit(m + 1)
            return
        if i not in descents:
            visit(i + 1)
        for j in candidates(i):
            st = ne_state.setdefault(j, [0, False, False, False])
            saved = st.copy()
            st[0] += 1
            st[1] = st[1] or i in descents
            small = j == i + 1
            st[2] = st[2] or small
            st[3] = st[3] or (small and w[i - 1] == w[j - 1])
            hooks.append((i, j))
            visit(i + 1)
            hooks.pop()
            ne_state[j] = saved

    visit(1)
    return results


def enumerate_vhc(
    w: Word, which: VhcFilter = VhcFilter.ALL, limit: int = MAX_VHC_LEN
) -> Iterator[HookConfig]:
    """Yield every valid hook configuration passing the filter, exactly once.

    Canonical order: lexicographic in the configuration's (sw index, ne index)
    sequence.
    """
    if len(w) > limit:
        raise SizeLimitError(f"word length {len(w)} exceeds limit {limit}")
    for pairs in sorted(_enumerate_pairs(w, which)):
        yield tuple(Hook((i, w[i - 1]), (j, w[j - 1])) for i, j in pairs)


def is_valid_config(w: Word, config: HookConfig, which: VhcFilter = VhcFilter.ALL) -> bool:
    """Re-check conditions 1-4 (and the filter) for an arbitrary hook tuple."""
    m = len(w)
    pairs = []
    for hook in config:
        (i, hi), (j, hj) = hook.sw, hook.ne
        if not (1 <= i < j <= m) or w[i - 1] != hi or w[j - 1] != hj or hi > hj:
            return False
        pairs.append((i, j))
    if any(pairs[u][0] >= pairs[u + 1][0] for u in range(len(pairs) - 1)):
        return False
    descents = {d for d in range(1, m) if w[d - 1] >= w[d]}
    sw_set = {i for i, _ in pairs}
    if not descents <= sw_set:
        return False
    for i, j in pairs:
        for i2, j2 in pairs:
            if i < i2 < j < j2:
                return False
    by_ne: dict[int, list[int]] = {}
    for i, j in pairs:
        by_ne.setdefault(j, []).append(i)
    for j, sws in by_ne.items():
        if not any(i in descents for i in sws):
            return False
        if not any(j == i + 1 for i in sws):
            return False
    if which is VhcFilter.ALL:
        return True
    if any(len(sws) > 2 for sws in by_ne.values()):
        return False
    if which is VhcFilter.R:
        return all(h.small or not h.horizontal for h in config)
    if which is VhcFilter.L:
        for h in config:
            if h.small and h.horizontal and len(by_ne[h.ne[0]]) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Colorings and compositions


def _class_positions(w: Word, pairs: list[tuple[int, int]]) -> list[list[int]]:
    """Positions per color class: index 0 is the sky, then one per hook.

    A hook covers every point strictly between its endpoints (valid hooks
    never pass strictly below a point, so interior points at exactly the
    horizontal's height count as covered too); its own endpoints never lie
    below it, and its northeast endpoint sees it by ending there.
    """
    classes: list[list[int]] = [[] for _ in range(len(pairs) + 1)]
    for a in range(1, len(w) + 1):
        color = 0
        for r, (i, j) in enumerate(pairs, start=1):
            if i < a <= j:
                color = r  # hooks are sw-sorted, so later r means rightmost sw
        classes[color].append(a)
    return classes


def _require_valid(w: Word, config: HookConfig) -> list[tuple[int, int]]:
    if not is_valid_config(w, config):
        raise DomainError(f"not a valid hook configuration of {w}: {config}")
    return [(h.sw[0], h.ne[0]) for h in config]


def induced_coloring(w: Word, config: HookConfig) -> tuple[int, ...]:
    """Color of each point, by position: 0 for the sky, r for hook number r."""
    pairs = _require_valid(w, config)
    colors = [0] * len(w)
    for r, positions in enumerate(_class_positions(w, pairs)):
        for a in positions:
            colors[a - 1] = r
    return tuple(colors)


def color_classes(w: Word, config: HookConfig) -> list[list[int]]:
    """Positions in each color class, sky first."""
    return _class_positions(w, _require_valid(w, config))


def induced_composition(w: Word, config: HookConfig) -> Composition:
    """Color-class sizes (q_0, ..., q_k); q_0 counts sky points."""
    return tuple(len(ps) for ps in color_classes(w, config))


def config_to_dict(w: Word, config: HookConfig) -> dict:
    """JSON-ready rendering: hooks with endpoints, the composition, its weight."""
    q = induced_composition(w, config)
    return {
        "hooks": [{"sw": list(h.sw), "ne": list(h.ne)} for h in config],
        "q": list(q),
        "catalan": catalan_product(q),
    }


# ---------------------------------------------------------------------------
# Counting and reconstructing preimages


def count_preimages(w: Word, variant: SortVariant, limit: int = MAX_VHC_LEN) -> int:
    """Number of words u with sort(u) = w, via the hook-configuration sum."""
    total = 0
    for config in enumerate_vhc(w, filter_for(variant), limit):
        pairs = [(h.sw[0], h.ne[0]) for h in config]
        q = tuple(len(ps) for ps in _class_positions(w, pairs))
        total += catalan_product(q)
    return total


def brute_preimages(
    w: Word, variant: SortVariant, space_limit: int = MAX_SPACE
) -> tuple[Word, ...]:
    """All preimages of w by exhausting its content class, in lexicographic order."""
    c = content(w)
    if word_space_size(c) > space_limit:
        raise SizeLimitError(f"|W_c| = {word_space_size(c)} exceeds limit {space_limit}")
    return tuple(
        u for u in enumerate_words(c, limit=len(w)) if sort_via_stack(u, variant) == w
    )


def in_order_preimages(
    w: Word, variant: SortVariant, limit: int = MAX_VHC_LEN
) -> list[Word]:
    """All preimages of w, read off the reconstructed trees (no brute force).

    Distinct configurations and spawned tuples give distinct trees, so the
    list has no duplicates.
    """
    return [
        in_order(tree)
        for config in enumerate_vhc(w, filter_for(variant), limit)
        for tree in build_preimage_trees(w, config, variant)
    ]


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """All unlabeled binary tree shapes on n nodes, as nested (left, right) pairs."""
    if n == 0:
        return (None,)
    out = []
    for left_size in range(n):
        for left in _shapes(left_size):
            for right in _shapes(n - 1 - left_size):
                out.append((left, right))
    return tuple(out)


def _label_shape(shape, labels: list[int]) -> PlaneTree | None:
    """The unique labeling with the given labels whose postorder is increasing."""
    it = iter(labels)

    def walk(sh) -> PlaneTree | None:
        if sh is None:
            return None
        left = walk(sh[0])
        right = walk(sh[1])
        return PlaneTree(next(it), left, right)

    return walk(shape)


def spawn_tuples(
    w: Word, config: HookConfig
) -> Iterator[tuple[PlaneTree | None, ...]]:
    """All tuples of per-color-class trees compatible with the configuration.

    Class r contributes every binary shape on its |Q_r| points, labeled by the
    class heights so that the postorder reads in increasing order; the tuple
    count is the Catalan product of the induced composition.
    """
    pairs = _require_valid(w, config)
    classes = _class_positions(w, pairs)
    per_class = []
    for positions in classes:
        heights = [w[p - 1] for p in positions]
        # Within a class, heights strictly increase with position.
        assert heights == sorted(set(heights)), f"class heights not increasing: {heights}"
        per_class.append([_label_shape(s, heights) for s in _shapes(len(heights))])
    yield from product(*per_class)


class _Node:
    __slots__ = ("label", "left", "right")

    def __init__(self, label: int):
        self.label = label
        self.left: _Node | None = None
        self.right: _Node | None = None


def _freeze(node: _Node | None) -> PlaneTree | None:
    if node is None:
        return None
    return PlaneTree(node.label, _freeze(node.left), _freeze(node.right))


def _swing_equal_right_children(node: _Node | None) -> None:
    """Move right children equal to their parent to the left (they are only children)."""
    if node is None:
        return
    _swing_equal_right_children(node.left)
    _swing_equal_right_children(node.right)
    if node.right is not None and node.right.label == node.label:
        assert node.left is None, "equal right child should be an only child"
        node.left, node.right = node.right, None


def build_preimage_trees(
    w: Word, config: HookConfig, variant: SortVariant
) -> Iterator[PlaneTree | None]:
    """Reconstruct the preimage trees spawned by one hook configuration.

    Grows the tree from the last letter backwards, attaching each leaf either
    along its hook (southwest endpoints; the right slot fills first) or under
    the vertex dictated by the spawned tree of the next point's color class,
    on the same side the class tree uses.  For the slow operator, equal-label
    right children are finally swung to the left.  Emitted trees have
    postorder w; their in-order readings, over all configurations of the
    matching family, are exactly the preimages of w, each exactly once.
    """
    which = filter_for(variant)
    if not is_valid_config(w, config, which):
        raise DomainError(f"configuration not in the {which.value} family of {w}")
    m = len(w)
    if m == 0:
        yield None
        return

    pairs = [(h.sw[0], h.ne[0]) for h in config]
    classes = _class_positions(w, pairs)
    sw_to_ne = dict(pairs)
    class_of: dict[int, int] = {}
    pred_in_class: dict[int, int] = {}
    position_of_height: list[dict[int, int]] = []
    for r, positions in enumerate(classes):
        by_height: dict[int, int] = {}
        for t, p in enumerate(positions):
            class_of[p] = r
            if t:
                pred_in_class[p] = positions[t - 1]
            by_height[w[p - 1]] = p
        position_of_height.append(by_height)

    for spawned in spawn_tuples(w, config):
        parent_sides: list[dict[int, tuple[int, str]]] = []
        for tree in spawned:
            sides: dict[int, tuple[int, str]] = {}
            stack = [tree]
            while stack:
                node = stack.pop()
                if node is None:
                    continue
                if node.left is not None:
                    sides[node.left.label] = (node.label, "L")
                    stack.append(node.left)
                if node.right is not None:
                    sides[node.right.label] = (node.label, "R")
                    stack.append(node.right)
            parent_sides.append(sides)

        nodes = [_Node(x) for x in w]  # nodes[p - 1] carries the p-th letter

        def attach(child: _Node, target: _Node, side: str) -> None:
            if side == "L":
                assert target.left is None, "left slot already taken"
                target.left = child
            else:
                assert target.right is None, "right slot already taken"
                target.right = child

        for pos in range(m - 1, 0, -1):
            leaf = nodes[pos - 1]
            if pos in sw_to_ne:
                target = nodes[sw_to_ne[pos] - 1]
                # Hook attachments fill the right slot first.
                if target.right is None:
                    assert target.left is None, "hook target has a dangling left child"
                    attach(leaf, target, "R")
                else:
                    attach(leaf, target, "L")
            else:
                r = class_of[pos + 1]
                u = pred_in_class.get(pos + 1)
                assert u is not None, f"no earlier point shares color with {pos + 1}"
                parent = parent_sides[r].get(w[u - 1])
                assert parent is not None, f"class-{r} tree gives {w[u - 1]} no parent"
                height, side = parent
                v = position_of_height[r][height]
                assert v >= pos + 1, "attachment target should not be placed yet"
                attach(leaf, nodes[v - 1], side)

        root = nodes[m - 1]
        if variant is SortVariant.SLOW:
            _swing_equal_right_children(root)
        yield _freeze(root)
