"""Weakly decreasing binary plane trees and the word bijections they carry.

A tree is either empty (None) or a labeled root with ordered left/right
subtrees, every child label at most its parent's.  Two subfamilies matter:
class L forbids a right child from equaling its parent's label (equal labels
hang left), class R forbids an equal left child (equal labels hang right).
The in-order reading is a bijection from each class onto all words; its
inverses differ only in which occurrence of the maximum letter becomes the
root (first for class R, last for class L).  Reading the same trees in
postorder performs one pass of the corresponding stack-sorting operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .sorting import SortVariant
from .words import DomainError, Word


@dataclass(frozen=True)
class PlaneTree:
    """Immutable binary plane tree node; None stands for the empty tree."""

    label: int
    left: PlaneTree | None = None
    right: PlaneTree | None = None


class TreeClass(Enum):
    """Where equal labels may hang: left children only (L) or right children only (R)."""

    L = "L"
    R = "R"


def tree_class_for(variant: SortVariant) -> TreeClass:
    """Tree class whose postorder reading realizes the given operator."""
    return TreeClass.R if variant is SortVariant.FAST else TreeClass.L


def in_order(t: PlaneTree | None) -> Word:
    """Left subtree, root, right subtree."""
    out: list[int] = []

    def walk(node: PlaneTree | None) -> None:
        if node is None:
            return
        walk(node.left)
        out.append(node.label)
        walk(node.right)

    walk(t)
    return tuple(out)


def postorder(t: PlaneTree | None) -> Word:
    """Subtrees left to right, then the root."""
    out: list[int] = []

    def walk(node: PlaneTree | None) -> None:
        if node is None:
            return
        walk(node.left)
        walk(node.right)
        out.append(node.label)

    walk(t)
    return tuple(out)


def word_to_tree(w: Word, cls: TreeClass) -> PlaneTree | None:
    """The unique tree in the given class whose in-order reading is w.

    Splits w = A n B at an occurrence of the largest letter n: the first
    occurrence for class R (so A is n-free), the last for class L (so B is
    n-free); the root is that occurrence and the sides recurse.
    """

    def build(lo: int, hi: int) -> PlaneTree | None:
        if lo >= hi:
            return None
        n = max(w[lo:hi])
        if cls is TreeClass.R:
            root = w.index(n, lo, hi)
        else:
            root = hi - 1 - w[lo:hi][::-1].index(n)
        return PlaneTree(n, build(lo, root), build(root + 1, hi))

    return build(0, len(w))


def in_class(t: PlaneTree | None, cls: TreeClass) -> bool:
    """Structural check: weakly decreasing, with equal labels on the allowed side."""
    if t is None:
        return True
    for child in (t.left, t.right):
        if child is not None and child.label > t.label:
            return False
    if cls is TreeClass.R and t.left is not None and t.left.label == t.label:
        return False
    if cls is TreeClass.L and t.right is not None and t.right.label == t.label:
        return False
    return in_class(t.left, cls) and in_class(t.right, cls)


def sort_via_trees(w: Word, variant: SortVariant) -> Word:
    """One sorting pass computed as postorder of the in-order-inverse tree."""
    return postorder(word_to_tree(w, tree_class_for(variant)))


def tree_to_text(t: PlaneTree | None) -> str:
    """Serialize as nested "(label left right)" with "." for the empty tree."""
    if t is None:
        return "."
    return f"({t.label} {tree_to_text(t.left)} {tree_to_text(t.right)})"


def tree_from_text(text: str) -> PlaneTree | None:
    """Parse the `tree_to_text` format."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> PlaneTree | None:
        nonlocal pos
        if pos >= len(tokens):
            raise DomainError(f"truncated tree text: {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == ".":
            return None
        if tok != "(":
            raise DomainError(f"unexpected token {tok!r} in tree text")
        label = int(tokens[pos])
        pos += 1
        left = parse()
        right = parse()
        if tokens[pos] != ")":
            raise DomainError(f"missing ')' in tree text: {text!r}")
        pos += 1
        return PlaneTree(label, left, right)

    result = parse()
    if pos != len(tokens):
        raise DomainError(f"trailing tokens in tree text: {text!r}")
    return result
