# -*- coding: utf-8 -*-
# cython: language_level=3
# BSD 3-Clause License
#
# Copyright (c) 2021, Lucina
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
#
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""Weighted context tree over binary contexts with the adaptive discount schedules.

Nodes are only materialized along context paths which have actually been visited; an
absent node behaves exactly like a node which has seen nothing (block probability 1).
Children are indexed by the context bit on their edge, so `children[1]` is the left
(edge labelled 1) child and `children[0]` the right one.
"""
from __future__ import annotations

__all__: list[str] = ["ContextTree", "Node", "log2_loss"]

import math
import typing

from . import estimator
from . import models

if typing.TYPE_CHECKING:
    import collections.abc as collections

_LOG_HALF: typing.Final[float] = math.log(0.5)
_LN2: typing.Final[float] = math.log(2.0)


def _mix(log_kt: float, log_children: float, /) -> float:
    # log(1/2 * exp(log_kt) + 1/2 * exp(log_children))
    if log_kt > log_children:
        return _LOG_HALF + log_kt + math.log1p(math.exp(log_children - log_kt))

    return _LOG_HALF + log_children + math.log1p(math.exp(log_kt - log_children))


class Node:
    __slots__: tuple[str, ...] = ("a", "b", "children", "log_kt", "log_w", "visits")

    def __init__(self) -> None:
        self.a = 0.0
        """Discounted count of zeros."""
        self.b = 0.0
        """Discounted count of ones."""
        self.children: list[typing.Optional[Node]] = [None, None]
        self.log_kt = 0.0
        """Natural log of this node's (discounted) KT block probability."""
        self.log_w = 0.0
        """Natural log of this node's weighted probability."""
        self.visits = 0
        """How many bits have been routed through this node."""

    @property
    def counts(self) -> estimator.CountPair:
        return estimator.CountPair(self.a, self.b, self.log_kt)


_Predictions = tuple[list[typing.Optional[Node]], list[float], list[float]]


class ContextTree:
    """A depth-bounded weighted context tree acting as an online binary predictor.

    A tree is a single-writer object; `predict` and `update` must not run concurrently.
    """

    __slots__: tuple[str, ...] = (
        "_additive",
        "_alpha",
        "_c",
        "_context",
        "_depth",
        "_gamma",
        "_kind",
        "_mask",
        "_predictions",
        "_root",
        "_t",
        "_variant",
    )

    def __init__(self, variant: typing.Optional[models.VariantConfig] = None, /) -> None:
        self._variant = variant or models.VariantConfig()
        self._depth = self._variant.depth
        self._kind = self._variant.kind
        self._gamma = self._variant.gamma
        self._c = self._variant.c
        self._alpha = self._variant.alpha
        self._additive = self._kind is models.VariantKind.LEAF_VISIT
        # Bit 0 of the context is the most recent history bit; the startup context is all zeros.
        self._context = 0
        self._mask = (1 << self._depth) - 1
        # Path and per-node log predictions from the last `predict`, consumed by the next `update`.
        self._predictions: typing.Optional[_Predictions] = None
        self._root = Node()
        self._t = 0

    @classmethod
    def from_config(cls, variant: models.VariantConfig, /) -> ContextTree:
        return cls(variant)

    @property
    def depth(self) -> int:
        return self._depth

    @property
    def history(self) -> tuple[int, ...]:
        """The last `depth` bits seen, oldest first (zero padded at startup)."""
        return tuple((self._context >> shift) & 1 for shift in range(self._depth - 1, -1, -1))

    @property
    def node_count(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    @property
    def root(self) -> Node:
        return self._root

    @property
    def t(self) -> int:
        """Number of bits processed so far."""
        return self._t

    @property
    def variant(self) -> models.VariantConfig:
        return self._variant

    def iter_nodes(self) -> collections.Iterator[tuple[int, Node]]:
        """Iterate over every materialized node along with its depth."""
        stack = [(0, self._root)]
        while stack:
            depth, node = stack.pop()
            yield depth, node
            stack.extend((depth + 1, child) for child in node.children if child is not None)

    def schedule_rate(self, node_depth: int, leaf_visits: int, node_visits: int, t: int, /) -> float:
        """Discount rate to apply at a node on the current context path.

        Parameters
        ----------
        node_depth
            Depth of the node being updated (the root is at depth 0).
        leaf_visits
            Visits to the leaf of the current context, including the current bit.
        node_visits
            Visits to the node being updated, including the current bit.
        t
            Bits processed before the current one.

        Returns
        -------
        float
            The rate in [0, 1). Leaf-context visit trees return 0 for internal nodes as
            those take the sums of their children's counts instead of being discounted.
        """
        kind = self._kind
        if kind is models.VariantKind.CTW:
            return 0.0

        if kind is models.VariantKind.FIXED_RATE:
            return self._gamma

        if kind is models.VariantKind.SEQ_LENGTH:
            return self._c * max(t, 1) ** -self._alpha

        if kind is models.VariantKind.PARTIAL_VISIT:
            return self._c * max(node_visits, 1) ** -self._alpha

        if kind is models.VariantKind.FULL_VISIT or node_depth == self._depth:
            return self._c * max(leaf_visits, 1) ** -self._alpha

        return 0.0

    def _walk(self) -> list[typing.Optional[Node]]:
        # Existing nodes on the current context path, root first; None past the materialized part.
        node: typing.Optional[Node] = self._root
        nodes = [node]
        context = self._context
        for _ in range(self._depth):
            if node is not None:
                node = node.children[context & 1]

            nodes.append(node)
            context >>= 1

        return nodes

    def _predictions_for_path(self) -> _Predictions:
        nodes = self._walk()
        log_p0: list[float] = []
        log_p1: list[float] = []
        for node in nodes:
            if node is None:
                log_p0.append(_LOG_HALF)
                log_p1.append(_LOG_HALF)

            else:
                total = node.a + node.b + 1.0
                log_p0.append(math.log((node.a + 0.5) / total))
                log_p1.append(math.log((node.b + 0.5) / total))

        return nodes, log_p0, log_p1

    def predict(self) -> float:
        """Probability that the next bit is 1 under the weighted mixture.

        This walks the current context path for both possible next bits without touching
        any node; the walk is kept for the following `update`.
        """
        predictions = self._predictions = self._predictions_for_path()
        nodes, log_p0, log_p1 = predictions
        difference = self._hypothetical_log_w(nodes, log_p1) - self._hypothetical_log_w(nodes, log_p0)
        if difference >= 0.0:
            return 1.0 / (1.0 + math.exp(-difference))

        ratio = math.exp(difference)
        return ratio / (1.0 + ratio)

    def _hypothetical_log_w(self, nodes: list[typing.Optional[Node]], log_probs: list[float], /) -> float:
        context = self._context
        leaf = nodes[-1]
        log_w = (leaf.log_kt if leaf else 0.0) + log_probs[-1]
        for node_depth in range(self._depth - 1, -1, -1):
            node = nodes[node_depth]
            if node is None:
                log_w = _mix(log_probs[node_depth], log_w)
                continue

            sibling = node.children[((context >> node_depth) & 1) ^ 1]
            log_w = _mix(node.log_kt + log_probs[node_depth], log_w + (sibling.log_w if sibling else 0.0))

        return log_w

    def update(self, bit: int, /) -> None:
        """Route `bit` down the current context path and update every node on it, leaf first."""
        bit = 1 if bit else 0
        predictions = self._predictions or self._predictions_for_path()
        self._predictions = None
        nodes = predictions[0]
        log_probs = predictions[1 + bit]
        depth = self._depth

        path = [self._root]
        context = self._context
        for node_depth in range(1, depth + 1):
            node = nodes[node_depth]
            if node is None:
                node = path[-1].children[context & 1] = Node()

            path.append(node)
            context >>= 1

        t = self._t
        leaf = path[depth]
        leaf.visits += 1
        leaf_visits = leaf.visits
        # In-place versions of estimator.kt_update and estimator.kt_update_additive.
        keep = 1.0 - self.schedule_rate(depth, leaf_visits, leaf_visits, t)
        leaf.log_kt += log_probs[depth]
        if bit:
            leaf.b += 1.0

        else:
            leaf.a += 1.0

        leaf.a *= keep
        leaf.b *= keep
        leaf.log_w = leaf.log_kt

        additive = self._additive
        per_node = self._kind is models.VariantKind.PARTIAL_VISIT
        if not per_node:
            keep = 1.0 - self.schedule_rate(0, leaf_visits, leaf_visits, t)

        for node_depth in range(depth - 1, -1, -1):
            node = path[node_depth]
            node.visits += 1
            node.log_kt += log_probs[node_depth]
            left, right = node.children[1], node.children[0]
            if additive:
                node.a = (left.a if left else 0.0) + (right.a if right else 0.0)
                node.b = (left.b if left else 0.0) + (right.b if right else 0.0)

            else:
                if per_node:
                    keep = 1.0 - self.schedule_rate(node_depth, leaf_visits, node.visits, t)

                if bit:
                    node.b += 1.0

                else:
                    node.a += 1.0

                node.a *= keep
                node.b *= keep

            node.log_w = _mix(node.log_kt, (left.log_w if left else 0.0) + (right.log_w if right else 0.0))

        self._context = ((self._context << 1) | bit) & self._mask
        self._t += 1

    def joint_logprob(self) -> float:
        """Natural log of the weighted probability of everything seen so far."""
        return self._root.log_w


def log2_loss(tree: ContextTree, bits: collections.Iterable[int], /) -> float:
    """Feed `bits` through `tree`, returning the sequential log-loss in bits."""
    loss = 0.0
    for bit in bits:
        p1 = tree.predict()
        loss -= math.log(p1 if bit else 1.0 - p1)
        tree.update(bit)

    return loss / _LN2
