# -*- coding:utf-8 -*-

"""
Tools.

Author: dgtransfer developers
Date:   2024/03/02
"""

import json
import time
import random
import itertools

from dgtransfer import const


def get_cur_timestamp_ms():
    """ Current timestamp (milliseconds).
    """
    return int(time.time() * 1000)


def dumps(data):
    """ Canonical json text: sorted keys, two-space indent, trailing newline.
    Identical input gives byte-identical output.
    """
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def get_rng(seed=0):
    """ A private random generator, seeded deterministically.
    @param seed 64-bit integer seed
    """
    return random.Random(seed)


def select_tuples(pools, limit, samples, seed=0):
    """ Tuples of the product of `pools`, exhaustively when the product is small.
    @param pools list of sequences, one per tuple position
    @param limit exhaustive when the product has at most `limit` tuples
    @param samples number of tuples drawn (with replacement) otherwise
    @param seed sampling seed
    @return (mode, tuples) mode is "exhaustive" or "sampled"
    """
    total = 1
    for pool in pools:
        total *= len(pool)
    if total == 0:
        return const.MODE_EXHAUSTIVE, []
    if total <= limit:
        return const.MODE_EXHAUSTIVE, list(itertools.product(*pools))
    rng = get_rng(seed)
    return const.MODE_SAMPLED, [tuple(rng.choice(pool) for pool in pools) for _ in range(samples)]
