# -*- coding:utf-8 -*-

"""
Decorator.

Author: dgtransfer developers
Date:   2024/03/02
"""

import functools

from dgtransfer.utils import logger
from dgtransfer.utils import tools


def timed(name):
    """ Log how long the decorated function took, and whether its report passed.

    Args:
        name: Name printed in the log line.

    NOTE:
        Elapsed times only go to the log; returned documents never carry them, so repeated runs stay
        byte-identical.
    """
    assert isinstance(name, str)

    def decorating_function(method):
        @functools.wraps(method)
        def wrapper(*args, **kwargs):
            start = tools.get_cur_timestamp_ms()
            result = method(*args, **kwargs)
            elapsed = tools.get_cur_timestamp_ms() - start
            passed = getattr(result, "passed", None)
            if passed is None:
                logger.info(name, "done in", "%dms" % elapsed)
            elif passed:
                logger.info(name, "passed in", "%dms" % elapsed)
            else:
                logger.warn(name, "FAILED in", "%dms" % elapsed)
            return result
        return wrapper
    return decorating_function
