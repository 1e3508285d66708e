# -*- coding:utf-8 -*-

"""
dgtransfer: DG algebra structures on the minimal free resolutions of R/m^a, obtained by homological perturbation.
"""

from dgtransfer.const import VERSION

__version__ = VERSION
