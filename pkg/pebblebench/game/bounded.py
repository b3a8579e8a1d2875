'''Bounded-round pebble game

Depth-limited AND/OR search: Spoiler (OR) picks a move that beats every
Duplicator reply (AND). Results are memoized per position as the
largest round budget known to lose and the smallest known to win, so
iterative deepening on the budget reuses earlier work.
'''
import logging

from pebblebench.game.position import (EMPTY_POSITION, add_pair,
                                       lift_options, live_responses, pair_of,
                                       pebbled)
from pebblebench.game.tree import StrategyNode
from pebblebench.graphconstant import Side
from pebblebench.util import iter_bits

logger = logging.getLogger()


class BoundedSolver():
    '''Solver of the k-pebble game with a round budget

    The memo table lives on the instance: one solver per (G, H, k).
    '''

    def __init__(self, g, h, pebbles):
        self.g = g
        self.h = h
        self.pebbles = pebbles
        self._losing = {}
        self._winning = {}
        self._degrees = {
            Side.G: [g.degree(v) for v in g.vertices()],
            Side.H: [h.degree(v) for v in h.vertices()]
        }

    def _graph(self, side):
        return self.g if side is Side.G else self.h

    def moves(self, position):
        '''Yield every Spoiler move from `position`

        A move is `(base, lifted, side, vertex, replies)` where `base` is
        the position after lifting and `replies` the live answers, ordered
        by closeness of degree.
        '''
        for base, lifted in lift_options(position, self.pebbles):
            for side in Side:
                graph = self._graph(side)
                taken = pebbled(base, side)
                for vertex in graph.vertices():
                    if taken >> vertex & 1:
                        continue
                    live = live_responses(self.g, self.h, base, side, vertex)
                    degree = self._degrees[side][vertex]
                    other = self._degrees[side.other()]
                    replies = sorted(iter_bits(live),
                                     key=lambda w: abs(other[w] - degree))
                    yield base, lifted, side, vertex, replies

    def wins(self, position, rounds):
        '''True if Spoiler forces a dead position within `rounds` rounds'''
        if rounds <= 0:
            return False
        if self._winning.get(position, rounds + 1) <= rounds:
            return True
        if self._losing.get(position, 0) >= rounds:
            return False

        moves = list(self.moves(position))
        result = any(not replies for *_, replies in moves)
        if result:
            self._winning[position] = 1
            return True

        if rounds > 1:
            for base, _, side, vertex, replies in moves:
                if all(self.wins(add_pair(base, pair_of(side, vertex, w)),
                                 rounds - 1) for w in replies):
                    result = True
                    break

        if result:
            self._winning[position] = min(
                self._winning.get(position, rounds), rounds)
        else:
            self._losing[position] = max(self._losing.get(position, 0),
                                         rounds)
        return result

    def rounds_needed(self, rounds, position=EMPTY_POSITION):
        '''Smallest budget <= `rounds` Spoiler wins with, None if none'''
        for budget in range(1, rounds + 1):
            if self.wins(position, budget):
                logger.debug("Spoiler wins in %d rounds with %d pebbles",
                             budget, self.pebbles)
                return budget
        return None

    def strategy(self, rounds, position=EMPTY_POSITION, labels=None):
        '''Build a winning Spoiler tree of depth <= `rounds`

        Pebble labels are the lowest free ones; a lifted pebble keeps its
        label.

        Args:
            rounds (int): Round budget, Spoiler must win with it
            position (tuple): Starting position
            labels (dict): Packed pair -> label for `position`

        Returns:
            StrategyNode or None if Spoiler does not win
        '''
        labels = labels or {}
        if not self.wins(position, rounds):
            return None

        for base, lifted, side, vertex, replies in self.moves(position):
            if replies and (rounds <= 1 or not all(
                    self.wins(add_pair(base, pair_of(side, vertex, w)),
                              rounds - 1) for w in replies)):
                continue

            if lifted is None:
                used = {labels[code] for code in base}
                label = min(i for i in range(self.pebbles) if i not in used)
            else:
                label = labels[lifted]
            children = []
            for w in replies:
                code = pair_of(side, vertex, w)
                child_labels = {c: labels[c] for c in base}
                child_labels[code] = label
                children.append((w, self.strategy(
                    rounds - 1, add_pair(base, code), child_labels)))
            return StrategyNode(lift=lifted, side=side, vertex=vertex,
                                label=label, responses=tuple(children))
        return None
