'''Unbounded pebble game

The set of live positions with at most k pairs is finite, so the game is
a reachability game: Spoiler wants to reach a dead position. The solver
computes Spoiler's attractor by backward propagation.

A challenge is a Spoiler placement `(base, side, vertex)` from a base
position with a free pebble. It wins at level 1 if Duplicator has no live
reply, and at level i + 1 once every reply leads to a position already won
at level <= i. A position wins at the level of its best challenge, taken
from the position itself when a pebble is free, else from the position
with one pair lifted. The level of the empty position is the number of
rounds Spoiler needs.
'''
from collections import deque
import logging

from tqdm import tqdm

from pebblebench.game.position import (EMPTY_POSITION, add_pair,
                                       live_responses, pair_of, pebbled,
                                       pack, remove_pair)
from pebblebench.graphconstant import Side
from pebblebench.util import iter_bits

logger = logging.getLogger()


class AttractorSolver():
    '''Least fixpoint solver for the unbounded k-pebble game

    *Exemple:*

    ```
    solver = AttractorSolver(g, h, 3)
    level = solver.solve()  # None if Duplicator survives forever
    ```
    '''

    def __init__(self, g, h, pebbles, progress=False):
        self.g = g
        self.h = h
        self.pebbles = pebbles
        self.progress = progress
        self.positions = []
        self.index = {}
        self.levels = None

    def enumerate_positions(self):
        '''List every live position with at most k pairs

        Pairs are added by increasing G vertex so each set is built once.
        '''
        self.positions = []
        self.index = {}
        stack = [(EMPTY_POSITION, 0)]
        while stack:
            position, first = stack.pop()
            self.index[position] = len(self.positions)
            self.positions.append(position)
            if len(position) == self.pebbles:
                continue
            for u in range(first, self.g.vertex_count):
                live = live_responses(self.g, self.h, position, Side.G, u)
                for x in iter_bits(live):
                    stack.append((add_pair(position, pack(u, x)), u + 1))
        logger.debug("%d live positions with at most %d pebbles",
                     len(self.positions), self.pebbles)
        return self.positions

    def solve(self):
        '''Run the propagation

        Returns:
            int: Level of the empty position, None if Duplicator survives
        '''
        self.enumerate_positions()
        count = len(self.positions)
        self._parents = [[i] if len(p) < self.pebbles else []
                         for i, p in enumerate(self.positions)]
        for i, position in enumerate(self.positions):
            if len(position) == self.pebbles:
                for code in position:
                    self._parents[self.index[remove_pair(position, code)]] \
                        .append(i)

        levels = [None] * count
        watchers = [[] for _ in range(count)]
        pending = []
        challenge_base = []
        queue = deque()

        def reach(base_id, level):
            for user in self._parents[base_id]:
                if levels[user] is None:
                    levels[user] = level
                    queue.append(user)

        bases = [i for i, p in enumerate(self.positions)
                 if len(p) < self.pebbles]
        for base_id in tqdm(bases, disable=not self.progress,
                            desc='challenges', leave=False):
            base = self.positions[base_id]
            for side in Side:
                graph = self.g if side is Side.G else self.h
                taken = pebbled(base, side)
                for vertex in graph.vertices():
                    if taken >> vertex & 1:
                        continue
                    live = live_responses(self.g, self.h, base, side, vertex)
                    if not live:
                        reach(base_id, 1)
                        continue
                    challenge = len(pending)
                    pending.append(0)
                    challenge_base.append(base_id)
                    for w in iter_bits(live):
                        target = self.index[add_pair(
                            base, pair_of(side, vertex, w))]
                        watchers[target].append(challenge)
                        pending[challenge] += 1

        while queue:
            won = queue.popleft()
            for challenge in watchers[won]:
                pending[challenge] -= 1
                if not pending[challenge]:
                    reach(challenge_base[challenge], levels[won] + 1)

        self.levels = levels
        level = levels[self.index[EMPTY_POSITION]]
        logger.debug("Attractor with %d pebbles: %d positions, "
                     "%d challenges, empty position level %s",
                     self.pebbles, count, len(pending), level)
        return level

    def level_of(self, position):
        '''Attractor level of a live position, None if not winning'''
        return self.levels[self.index[position]]
