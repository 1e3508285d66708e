# -*- coding:utf-8 -*-

import sys

from dgtransfer.cli import main

sys.exit(main())
