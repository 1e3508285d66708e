# -*- coding:utf-8 -*-

"""
Logger.

Console output goes to stderr: stdout is reserved for the JSON documents of the cli.

Author: dgtransfer developers
Date:   2024/03/02
"""

import os
import shutil
import logging
import traceback
from logging.handlers import TimedRotatingFileHandler

try:
    import coloredlogs
    use_colorlog = True
except ImportError:
    use_colorlog = False

FMT_STR = "%(levelname)1.1s [%(asctime)s] %(message)s"


def initLogger(log_level="INFO", log_path=None, logfile_name=None, clear=False, backup_count=0):
    """ Initialize the root logger.

    Args:
        log_level: DEBUG/INFO/WARNING/ERROR.
        log_path: Directory for log files, only used with `logfile_name`.
        logfile_name: Log file name; None means log to the console (stderr).
        clear: Remove `log_path` before logging into it.
        backup_count: Number of daily files kept, 0 keeps all.
    """
    logger = logging.getLogger()
    logger.setLevel(log_level)
    for h in list(logger.handlers):
        logger.removeHandler(h)
    if logfile_name:
        if clear and os.path.isdir(log_path):
            shutil.rmtree(log_path)
        if not os.path.isdir(log_path):
            os.makedirs(log_path)
        logfile = os.path.join(log_path, logfile_name)
        handler = TimedRotatingFileHandler(logfile, "midnight", backupCount=backup_count)
    elif use_colorlog:
        coloredlogs.install(level=log_level, logger=logger, fmt=FMT_STR)
        return
    else:
        handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(fmt=FMT_STR, datefmt=None))
    logger.addHandler(handler)


def info(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    logging.info(_log(msg_header, *args, **kwargs))


def warn(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    logging.warning(_log(msg_header, *args, **kwargs))


def debug(*args, **kwargs):
    if not logging.getLogger().isEnabledFor(logging.DEBUG):
        return
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    logging.debug(_log(msg_header, *args, **kwargs))


def error(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    logging.error(_log(msg_header, *args, **kwargs))


def exception(*args, **kwargs):
    msg_header, kwargs = _log_msg_header(*args, **kwargs)
    logging.error(_log(msg_header, *args, **kwargs))
    logging.error(traceback.format_exc())


def _log(msg_header, *args, **kwargs):
    parts = [msg_header.rstrip()]
    for l in args:
        parts.append(l if isinstance(l, str) else repr(l))
    if kwargs:
        parts.append(str(kwargs))
    return " ".join(parts)


def _log_msg_header(*args, **kwargs):
    """ Message header `[ClassName]`.

    NOTE: logger.xxx(... caller=self) for instance method
          logger.xxx(... caller=cls) for @classmethod
    """
    cls_name = ""
    _caller = kwargs.pop("caller", None)
    if _caller is not None:
        if not hasattr(_caller, "__name__"):
            _caller = _caller.__class__
        cls_name = _caller.__name__
    return "[{cls_name}] ".format(cls_name=cls_name), kwargs
