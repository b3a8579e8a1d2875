'''Spoiler strategy trees

A `StrategyNode` is one Spoiler move: the pair lifted (None when a
pebble is free), the side and vertex pebbled, the label of the pebble
used, and one child per live Duplicator reply. A node without replies is a
move Duplicator cannot answer.

The JSON form is the nested mapping

```
{"lift": [u, x] | null, "side": "G" | "H", "vertex": v, "label": i,
 "responses": [{"reply": w, "next": {...}}, ...]}
```
'''
from collections import namedtuple
import logging

from pebblebench.exception import StrategyError
from pebblebench.game.position import (EMPTY_POSITION, add_pair,
                                       live_responses, pack, pair_of,
                                       remove_pair, unpack)
from pebblebench.graphconstant import Side
from pebblebench.util import iter_bits

logger = logging.getLogger()


StrategyNode = namedtuple('StrategyNode', ['lift', 'side', 'vertex', 'label',
                                           'responses'])
StrategyNode.__doc__ = '''`lift` is a packed pair or None, `responses` a
tuple of `(reply, StrategyNode)`'''


def strategy_depth(node):
    '''Number of rounds the tree needs in the worst case'''
    return 1 + max((strategy_depth(child) for _, child in node.responses),
                   default=0)


def strategy_to_json(node):
    '''Convert a strategy tree to nested dicts and lists'''
    return {
        'lift': list(unpack(node.lift)) if node.lift is not None else None,
        'side': node.side.name,
        'vertex': node.vertex,
        'label': node.label,
        'responses': [{'reply': reply, 'next': strategy_to_json(child)}
                      for reply, child in node.responses]
    }


def strategy_from_json(data):
    '''Rebuild a strategy tree from `strategy_to_json` output

    Raises:
        StrategyError: Missing keys or wrong types
    '''
    try:
        lift = data['lift']
        node = StrategyNode(
            lift=pack(*lift) if lift is not None else None,
            side=Side[data['side']],
            vertex=int(data['vertex']),
            label=int(data['label']),
            responses=tuple((int(r['reply']), strategy_from_json(r['next']))
                            for r in data['responses']))
    except (KeyError, TypeError, ValueError) as e:
        msg = "Malformed strategy tree: %s" % e
        logger.error(msg)
        raise StrategyError(msg) from e
    return node


def replay_strategy(g, h, pebbles, tree):
    '''Check that `tree` wins against every Duplicator reply

    Each node must be a legal move from the position reached so far, list
    exactly the live replies, and a node without replies must leave
    Duplicator without any.

    Returns:
        bool
    '''
    def replay(position, node):
        if node.lift is None:
            if len(position) >= pebbles:
                return False
            base = position
        else:
            if node.lift not in position:
                return False
            base = remove_pair(position, node.lift)

        side = Side(node.side)
        size = (g if side is Side.G else h).vertex_count
        if not 0 <= node.vertex < size:
            msg = "Strategy pebbles vertex %d of a %d-vertex graph" % (
                node.vertex, size)
            logger.error(msg)
            raise StrategyError(msg)

        live = live_responses(g, h, base, side, node.vertex)
        if set(iter_bits(live)) != {reply for reply, _ in node.responses}:
            return False
        return all(replay(add_pair(base, pair_of(side, node.vertex, reply)),
                          child)
                   for reply, child in node.responses)

    return replay(EMPTY_POSITION, tree)
