# -*- coding:utf-8 -*-

"""
Perturbation Lemma for deformation retracts with a nilpotent perturbation.

With A = (sum_k (delta h)^k) delta:
    i_inf = i + h A i,  p_inf = p + p A h,  h_inf = h + h A h,
    d_inf^X = d^X + delta,  d_inf^Y = d^Y + p A i.

Author: dgtransfer developers
Date:   2024/03/07
"""

from dgtransfer import const
from dgtransfer.error import NotSmall, PerturbationError
from dgtransfer.homological import GradedMap, SdrData, verify_sdr
from dgtransfer.report import Report
from dgtransfer.utils import logger


class Perturbation:
    """ A perturbation delta of the differential of X: a GradedMap of shift -1 with (d + delta)^2 = 0. """

    def __init__(self, X, delta):
        if delta.shift != -1 or delta.source != X.module or delta.target != X.module:
            raise PerturbationError("a perturbation is an endomorphism of X of shift -1")
        self.X = X
        self.delta = delta

    def perturbed_differential(self):
        return self.X.differential + self.delta

    def verify(self):
        """ Raise PerturbationError when (d + delta)^2 != 0. """
        d = self.perturbed_differential()
        if not d.compose(d).is_zero():
            raise PerturbationError("perturbed differential does not square to zero")
        return True

    @classmethod
    def zero(cls, X):
        return cls(X, GradedMap.zero(X.module, X.module, -1))


def nilpotency_order(delta, h, bound=None):
    """ Least N <= bound with (delta h)^N = 0 and (h delta)^N = 0.

    The default bound is rank X + 1, enough for any nilpotent endomorphism of a free module of that rank.

    Raises:
        NotSmall: no such N.
    """
    module = h.source
    bound = module.rank() + 1 if bound is None else bound
    if bound < 1:
        raise NotSmall("bound must be at least 1")
    dh = delta.compose(h)
    hd = h.compose(delta)
    left, right = dh, hd
    for N in range(1, bound + 1):
        if left.is_zero() and right.is_zero():
            return N
        left = left.compose(dh)
        right = right.compose(hd)
    raise NotSmall("(delta h)^N != 0 for all N <= {}".format(bound))


def geometric_series(f, N):
    """ sum_{k < N} f^k. """
    one = GradedMap.identity(f.source)
    total, term = one, one
    for _ in range(1, N):
        term = f.compose(term)
        total = total + term
    return total


class PerturbedSdr:
    """ Output of the Perturbation Lemma.

    Attributes:
        source: The unperturbed SdrData.
        perturbation: The Perturbation.
        i_inf, p_inf, h_inf: Perturbed maps.
        X_inf, Y_inf: X with d + delta, Y with d^Y + p A i.
        A: (sum (delta h)^k) delta.
        nilpotency_order: N with (delta h)^N = 0.
    """

    def __init__(self, source, perturbation, A, i_inf, p_inf, h_inf, X_inf, Y_inf, order):
        self.source = source
        self.perturbation = perturbation
        self.A = A
        self.i_inf = i_inf
        self.p_inf = p_inf
        self.h_inf = h_inf
        self.X_inf = X_inf
        self.Y_inf = Y_inf
        self.nilpotency_order = order
        self.special = source.special

    @property
    def d_inf_X(self):
        return self.X_inf.differential

    @property
    def d_inf_Y(self):
        return self.Y_inf.differential

    def as_sdr(self):
        return SdrData(self.X_inf, self.Y_inf, self.i_inf, self.p_inf, self.h_inf, special=self.special,
                       name=(self.source.name + "_inf") if self.source.name else "perturbed")

    def __repr__(self):
        return "<PerturbedSdr N={} Y={}>".format(self.nilpotency_order, self.Y_inf.module.ranks())


def series_forms(sdr, delta, N):
    """ The rewritten forms (sum (h delta)^k) i, p sum (delta h)^k, h sum (delta h)^k and d^Y + p delta i_inf. """
    dh = delta.compose(sdr.h)
    hd = sdr.h.compose(delta)
    right = geometric_series(dh, N)
    i_inf = geometric_series(hd, N).compose(sdr.i)
    p_inf = sdr.p.compose(right)
    h_inf = sdr.h.compose(right)
    d_y = sdr.Y.differential + sdr.p.compose(delta).compose(i_inf)
    return i_inf, p_inf, h_inf, d_y


def perturb(sdr, delta, bound=None):
    """ Apply the Perturbation Lemma.

    Args:
        sdr: SdrData.
        delta: Perturbation, or a GradedMap of shift -1 on sdr.X.
        bound: Nilpotency search bound.

    Returns:
        PerturbedSdr; its closed forms are cross-checked against the series forms.

    Raises:
        PerturbationError: (d + delta)^2 != 0, or closed and series forms disagree.
        NotSmall: delta h is not nilpotent within the bound.
    """
    if not isinstance(delta, Perturbation):
        delta = Perturbation(sdr.X, delta)
    delta.verify()
    dl = delta.delta
    N = nilpotency_order(dl, sdr.h, bound)
    A = geometric_series(dl.compose(sdr.h), N).compose(dl)
    i_inf = sdr.i + sdr.h.compose(A).compose(sdr.i)
    p_inf = sdr.p + sdr.p.compose(A).compose(sdr.h)
    h_inf = sdr.h + sdr.h.compose(A).compose(sdr.h)
    d_y = sdr.Y.differential + sdr.p.compose(A).compose(sdr.i)
    X_inf = sdr.X.with_differential(delta.perturbed_differential(), name=(sdr.X.name + "_inf") if sdr.X.name else "")
    Y_inf = sdr.Y.with_differential(d_y, name=(sdr.Y.name + "_inf") if sdr.Y.name else "")

    for name, closed, series in zip(("i_inf", "p_inf", "h_inf", "d_inf_Y"), (i_inf, p_inf, h_inf, d_y),
                                    series_forms(sdr, dl, N)):
        if closed != series:
            raise PerturbationError("closed and series forms of {} disagree".format(name))
    logger.info("perturbation lemma applied:", sdr.name, "nilpotency order", N, caller=PerturbedSdr)
    return PerturbedSdr(sdr, delta, A, i_inf, p_inf, h_inf, X_inf, Y_inf, N)


def verify_perturbed_special(ps, report=None, max_failures=const.DEFAULT_MAX_FAILURES):
    """ p_inf i_inf = 1, i_inf p_inf - 1 = d h_inf + h_inf d, h_inf^2 = 0, h_inf i_inf = 0, p_inf h_inf = 0, and
    d_inf^Y squares to zero.
    """
    sdr = ps.as_sdr()
    report = verify_sdr(sdr, special=True, report=report or Report("perturbed", max_failures))
    ps.Y_inf.verify_square_zero(report, "d_inf_Y^2=0")
    return report


def check_series_truncation(ps):
    """ Appending one more term to every series changes nothing. """
    source = ps.source
    longer = series_forms(source, ps.perturbation.delta, ps.nilpotency_order + 1)
    return all(a == b for a, b in zip(longer, (ps.i_inf, ps.p_inf, ps.h_inf, ps.d_inf_Y)))


def check_identity_when_zero(sdr):
    """ perturb with delta = 0 returns the input maps. """
    ps = perturb(sdr, Perturbation.zero(sdr.X))
    return ps.i_inf == sdr.i and ps.p_inf == sdr.p and ps.h_inf == sdr.h and \
        ps.d_inf_Y == sdr.Y.differential and ps.nilpotency_order == 1


__all__ = ("Perturbation", "PerturbedSdr", "nilpotency_order", "perturb", "series_forms", "verify_perturbed_special",
           "check_series_truncation", "check_identity_when_zero")
