# -*- coding:utf-8 -*-

"""
Config module.

Author: dgtransfer developers
Date:   2024/03/02
"""

import json

from dgtransfer import const
from dgtransfer.error import ConfigError


class Config:
    """ Config module will load a json file like `config.json` and parse the content to json object.
        1. Configure content must be key-value pair, and `key` will be set as Config module's attributes;
        2. Invoking Config module's attributes can get those values;
        3. Upper case keys are the built-in sections:
            LOG: Logger print config, default is {} (console logging at INFO).
            DEFAULTS: Default job parameters: characteristic, seed, samples, exhaustive_limit,
                max_failures. Missing entries fall back to `dgtransfer.const`.
    """

    def __init__(self):
        self.log = {}
        self.defaults = {}
        self.config_file = None
        self._update({})

    def loads(self, config_file=None):
        """ Load config file.

        Args:
            config_file: config json file.

        Raises:
            ConfigError: file unreadable, not json, or empty.
        """
        self.config_file = config_file
        configures = {}
        if config_file:
            try:
                with open(config_file) as f:
                    configures = json.loads(f.read())
            except (OSError, ValueError) as e:
                raise ConfigError("config file {}: {}".format(config_file, e))
            if not configures or not isinstance(configures, dict):
                raise ConfigError("config json file error: {}".format(config_file))
        self._update(configures)

    def _update(self, update_fields):
        """ Update config attributes.

        Args:
            update_fields: Update fields.
        """
        self.log = update_fields.get("LOG", {})
        defaults = {
            "characteristic": const.DEFAULT_CHARACTERISTIC,
            "seed": const.DEFAULT_SEED,
            "samples": const.DEFAULT_SAMPLES,
            "exhaustive_limit": const.DEFAULT_EXHAUSTIVE_LIMIT,
            "max_failures": const.DEFAULT_MAX_FAILURES,
        }
        defaults.update(update_fields.get("DEFAULTS", {}))
        self.defaults = defaults

        for k, v in update_fields.items():
            setattr(self, k, v)

    def get(self, k, defval=None):
        return getattr(self, k, defval)


config = Config()
