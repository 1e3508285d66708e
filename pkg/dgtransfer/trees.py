# -*- coding:utf-8 -*-

"""
Planar rooted trees.

A tree is a leaf or an internal node with an ordered list of at least two subtrees. Trees serialize
as nested bracket strings, `.` being a leaf: `((.,.),.)`.

Author: dgtransfer developers
Date:   2024/03/08
"""

import functools
import itertools

from dgtransfer.error import ParseError


class PlanarTree:
    """ Planar rooted tree.

    Attributes:
        children: tuple of PlanarTree; empty for a leaf.
        arity: number of leaves.
    """

    __slots__ = ("children", "arity")

    def __init__(self, children=()):
        children = tuple(children)
        if len(children) == 1:
            raise ValueError("an internal node has at least two children")
        self.children = children
        self.arity = sum(c.arity for c in children) if children else 1

    @classmethod
    def leaf(cls):
        return cls()

    def is_leaf(self):
        return not self.children

    def is_binary(self):
        return self.is_leaf() or (len(self.children) == 2 and all(c.is_binary() for c in self.children))

    def internal_nodes(self):
        if self.is_leaf():
            return 0
        return 1 + sum(c.internal_nodes() for c in self.children)

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and self.children == other.children

    def __hash__(self):
        return hash(self.children)

    def __str__(self):
        if self.is_leaf():
            return "."
        return "(" + ",".join(str(c) for c in self.children) + ")"

    def __repr__(self):
        return "PlanarTree({})".format(str(self))

    @classmethod
    def parse(cls, text):
        """ Inverse of str(). """
        text = text.replace(" ", "")
        tree, pos = cls._parse(text, 0)
        if pos != len(text):
            raise ParseError("trailing characters in tree {!r}".format(text))
        return tree

    @classmethod
    def _parse(cls, text, pos):
        if pos >= len(text):
            raise ParseError("unexpected end of tree text")
        if text[pos] == ".":
            return cls.leaf(), pos + 1
        if text[pos] != "(":
            raise ParseError("unexpected {!r} at {} in tree text".format(text[pos], pos))
        children = []
        pos += 1
        while True:
            child, pos = cls._parse(text, pos)
            children.append(child)
            if pos >= len(text):
                raise ParseError("unterminated tree text")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise ParseError("unexpected {!r} at {} in tree text".format(text[pos], pos))
        if len(children) < 2:
            raise ParseError("internal node with a single child in tree text")
        return cls(children), pos


LEAF = PlanarTree.leaf()


@functools.lru_cache(maxsize=None)
def _pbt(n):
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in _pbt(k):
            for right in _pbt(n - k):
                out.append(PlanarTree((left, right)))
    return tuple(out)


def _compositions(n, parts_min=2):
    """ Ordered compositions of n into at least `parts_min` positive parts. """
    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail
    for comp in rec(n):
        if len(comp) >= parts_min:
            yield comp


@functools.lru_cache(maxsize=None)
def _pt(n):
    if n == 1:
        return (LEAF,)
    out = []
    for comp in _compositions(n):
        for children in itertools.product(*[_pt(part) for part in comp]):
            out.append(PlanarTree(children))
    return tuple(out)


def enumerate_pbt(n):
    """ Planar binary rooted trees with n leaves; there are Catalan(n-1) of them. """
    if n < 1:
        raise ValueError("need at least one leaf")
    return list(_pbt(n))


def enumerate_pt(n):
    """ Planar rooted trees with n leaves (internal nodes of arity >= 2); little Schroeder numbers. """
    if n < 1:
        raise ValueError("need at least one leaf")
    return list(_pt(n))


def catalan(k):
    out = 1
    for j in range(k):
        out = out * 2 * (2 * j + 1) // (j + 2)
    return out


def little_schroeder(n):
    """ 1, 1, 3, 11, 45, ... for n = 1, 2, 3, ... leaves, by the recurrence for super-Catalan numbers. """
    s = [0, 1, 1]
    for m in range(3, n + 1):
        s.append((3 * (2 * m - 3) * s[m - 1] - (m - 3) * s[m - 2]) // m)
    return s[n]
