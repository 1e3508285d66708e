# -*- coding:utf-8 -*-

"""
Error information.

Two flavours live here:
    1. `Error`, a plain message holder returned in `(success, error)` pairs by the
       command functions of the cli module;
    2. the exception hierarchy raised by construction code.

Author: dgtransfer developers
Date:   2024/03/02
"""


class Error:

    def __init__(self, msg, code=None):
        self._msg = msg
        self._code = code

    @property
    def msg(self):
        return self._msg

    @property
    def code(self):
        return self._code

    def __str__(self):
        return str(self._msg)

    def __repr__(self):
        return str(self)


class DGTransferError(Exception):
    """ Base class of every exception raised by this package. """


class FieldError(DGTransferError):
    """ Problems with the coefficient field. """


class DivisorVanishes(FieldError):
    """ A scalar division by a residue that is zero in the field. """


class InadmissibleCharacteristic(FieldError):
    """ Characteristic is not prime, or too small for the requested construction. """


class ShapeError(DGTransferError):
    """ Incompatible sources/targets, or mismatched number of variables. """


class NotSmall(DGTransferError):
    """ No nilpotency order found for the perturbation within the bound. """


class PerturbationError(DGTransferError):
    """ The perturbed differential does not square to zero. """


class ParseError(DGTransferError):
    """ Element text does not follow the documented grammar. """


class ConfigError(DGTransferError):
    """ Config file missing, unreadable or malformed. """


class VerificationError(DGTransferError):
    """ A construction was asked to verify itself and some identity failed.

    Attributes:
        report: The failing `Report`.
    """

    def __init__(self, msg, report=None):
        super(VerificationError, self).__init__(msg)
        self.report = report
