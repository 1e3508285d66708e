# -*- coding:utf-8 -*-

"""
The Koszul double complex S = (Lambda^i (x) S_j) with horizontal differential kappa, vertical
differential d, the scaled de Rham contraction sigma of its rows, the augmentation epsilon, and the
truncations X_a = tr_{<= a-1}(S) with their DG product.

Homological degree of Lambda^i (x) S_j is i; totalization adds no signs.

Author: dgtransfer developers
Date:   2024/03/06
"""

import math
import itertools

from dgtransfer import const
from dgtransfer.algebra import (BiBasisVector, BiElement, accumulate, bi_product, ext_monomials, monomials_of_degree,
                                permute, polynomial_ring, wedge)
from dgtransfer.error import ShapeError, VerificationError
from dgtransfer.homological import BasedModule, ChainComplex, GradedMap, GradedModule, ModuleMap
from dgtransfer.report import Report
from dgtransfer.utils import logger
from dgtransfer.utils import tools


def _kappa_basis(ring, v):
    terms = {}
    for k, t in enumerate(v.ext):
        sym = list(v.sym)
        sym[t - 1] += 1
        accumulate(terms, BiBasisVector(v.ext[:k] + v.ext[k + 1:], tuple(sym)), ring.one if k % 2 == 0 else -ring.one)
    return BiElement(ring, terms)


def _d_basis(ring, v):
    terms = {}
    for k, t in enumerate(v.ext):
        x = ring.gen(t)
        accumulate(terms, BiBasisVector(v.ext[:k] + v.ext[k + 1:], v.sym), x if k % 2 == 0 else -x)
    return BiElement(ring, terms)


def _sigma_basis(ring, v):
    i, m = len(v.ext), sum(v.sym)
    if m == 0 or i == ring.n:
        return BiElement(ring)
    scale = ring.field.reciprocal(i + m)
    terms = {}
    for p in range(1, ring.n + 1):
        mult = v.sym[p - 1]
        if not mult:
            continue
        sign, ext = wedge((p,), v.ext)
        if not sign:
            continue
        sym = list(v.sym)
        sym[p - 1] -= 1
        accumulate(terms, BiBasisVector(ext, tuple(sym)), ring.const(sign * mult).mul_ground(scale))
    return BiElement(ring, terms)


def kappa(alpha):
    """ kappa(e_{t1}..e_{tk} (x) mu) = sum_j (-1)^{j+1} e_{..t_j omitted..} (x) y_{t_j} mu. """
    ring = alpha.ring
    return alpha.map_basis(lambda v: _kappa_basis(ring, v))


def vertical_d(alpha):
    """ d(e_{t1}..e_{tk} (x) mu) = sum_u (-1)^{u+1} x_{t_u} e_{..t_u omitted..} (x) mu. """
    ring = alpha.ring
    return alpha.map_basis(lambda v: _d_basis(ring, v))


def sigma(alpha):
    """ sigma(e_T (x) y_{p1}..y_{pm}) = 1/(i+m) sum_j e_{p_j} ^ e_T (x) y_{p1}..(y_{pj} omitted)..y_{pm}.

    Zero on S_0 columns and on Lambda^n.

    Raises:
        DivisorVanishes: i + m is zero in the field for a touched component.
    """
    ring = alpha.ring
    return alpha.map_basis(lambda v: _sigma_basis(ring, v))


def epsilon(alpha):
    """ Evaluation y_i -> x_i on an element supported on Lambda^0; returns a polynomial. """
    ring = alpha.ring
    out = ring.zero
    for v, f in alpha.terms.items():
        if v.lambda_degree:
            raise ShapeError("epsilon is only defined on Lambda^0, got {}".format(v.text))
        out += f * ring.evaluate_y(v.sym)
    return out


def epsilon_inverse(ring, f):
    """ f -> f (1 (x) 1). """
    return BiElement.unit(ring).scale(f)


def product_Xa(alpha, beta, a):
    """ Product of X_a: bi_product, then components with column >= a are deleted. """
    return bi_product(alpha, beta).truncate(a)


def scaled_leibniz_coefficients(i, a, j, b, field):
    """ (r, s) with sigma(xy) = r sigma(x) y + s x sigma(y) for x in Lambda^i (x) S_a, y in Lambda^j (x) S_b.

    r = (i+a)/(i+a+j+b), s = (-1)^i (j+b)/(i+a+j+b).
    """
    total = field(i + a + j + b)
    r = field.divide(field(i + a), total)
    s = field.divide(field((-1) ** i * (j + b)), total)
    return r, s


class TautologicalBicomplex:
    """ Components Lambda^i (x) S_j, 0 <= i <= n, 0 <= j <= column_bound, and the maps between them.

    Attributes:
        n: Number of variables.
        column_bound: Largest column index materialized in rows.
        field: FieldSpec.
        ring: PolynomialRing.
    """

    def __init__(self, n, column_bound, field):
        self.n = n
        self.column_bound = column_bound
        self.field = field
        self.ring = polynomial_ring(n, field.characteristic)
        self._modules = {}

    def rank(self, i, j):
        if not 0 <= i <= self.n or j < 0:
            return 0
        return math.comb(self.n, i) * math.comb(self.n + j - 1, j)

    def basis(self, i, j):
        return [BiBasisVector(T, mu) for T in ext_monomials(self.n, i) for mu in monomials_of_degree(self.n, j)]

    def module(self, i, j):
        key = (i, j)
        if key not in self._modules:
            labels = self.basis(i, j) if 0 <= i <= self.n and j >= 0 else []
            self._modules[key] = BasedModule(labels, lambda v: v.internal_degree, self.ring, BiElement)
        return self._modules[key]

    def _map(self, source, target, image):
        ring = self.ring
        return ModuleMap.from_function(source, target, lambda v: image(ring, v))

    def kappa_map(self, i, j):
        return self._map(self.module(i, j), self.module(i - 1, j + 1), _kappa_basis)

    def d_map(self, i, j):
        return self._map(self.module(i, j), self.module(i - 1, j), _d_basis)

    def sigma_map(self, i, j):
        return self._map(self.module(i, j), self.module(i + 1, j - 1), _sigma_basis)

    def row_degrees(self, r):
        return [i for i in range(0, min(self.n, r) + 1) if r - i <= self.column_bound]

    def row(self, r):
        """ Row r: Lambda^i (x) S_{r-i} in degree i, differential kappa. """
        degrees = self.row_degrees(r)
        module = GradedModule({i: self.module(i, r - i) for i in degrees}, self.ring, BiElement)
        blocks = {}
        for i in degrees:
            if i - 1 in degrees:
                blocks[i] = self.kappa_map(i, r - i)
        return ChainComplex(module, GradedMap(module, module, -1, blocks), name="row{}".format(r))

    def row_contraction(self, row, r):
        """ sigma on row r, as a map of shift +1. """
        degrees = row.degrees()
        blocks = {}
        for i in degrees:
            if i + 1 in degrees:
                blocks[i] = self.sigma_map(i, r - i)
        return GradedMap(row.module, row.module, 1, blocks)


class TruncatedComplexXa:
    """ X_a = tr_{<= a-1}(S): totalization with differential kappa + d, and the truncated product.

    Attributes:
        a: Truncation level, columns 0..a-1 are kept.
        bicomplex: The ambient TautologicalBicomplex (rows materialized up to column a+1).
        module: GradedModule, degree i = sum_j Lambda^i (x) S_j.
        horizontal: kappa, truncated.
        vertical: d.
        complex: ChainComplex with differential kappa + d.
    """

    def __init__(self, n, a, field):
        if a < 1:
            raise ShapeError("truncation level must be positive, got a={}".format(a))
        self.n = n
        self.a = a
        self.field = field
        self.bicomplex = TautologicalBicomplex(n, a + 1, field)
        self.ring = self.bicomplex.ring
        components = {}
        for i in range(0, n + 1):
            labels = [v for j in range(0, a) for v in self.bicomplex.basis(i, j)]
            components[i] = BasedModule(labels, lambda v: v.internal_degree, self.ring, BiElement)
        self.module = GradedModule(components, self.ring, BiElement)
        ring = self.ring
        self.horizontal = GradedMap.from_function(self.module, self.module, -1,
                                                  lambda v: _kappa_basis(ring, v).truncate(a))
        self.vertical = GradedMap.from_function(self.module, self.module, -1, lambda v: _d_basis(ring, v))
        self.complex = ChainComplex(self.module, self.horizontal + self.vertical, name="X{}".format(a))

    def __repr__(self):
        return "<TruncatedComplexXa n={} a={} char={}>".format(self.n, self.a, self.field.characteristic)

    @property
    def unit(self):
        return BiElement.unit(self.ring)

    def product(self, alpha, beta):
        return product_Xa(alpha, beta, self.a)

    def contraction(self):
        """ -sigma on X_a (lands in X_a: sigma lowers the column). """
        ring = self.ring
        return GradedMap.from_function(self.module, self.module, 1, lambda v: -_sigma_basis(ring, v))

    def quotient_to(self, other):
        """ The DG algebra surjection X_a -> X_{a'} for a' <= a, deleting columns >= a'. """
        if other.a > self.a or other.n != self.n or other.field != self.field:
            raise ShapeError("no quotient map X{} -> X{}".format(self.a, other.a))
        a = other.a
        ring = self.ring
        return GradedMap.from_function(self.module, other.module, 0,
                                       lambda v: BiElement.basis(ring, v) if v.column < a else BiElement(ring))


def build_Xa(n, a, field, verify=True):
    """ Build X_a, checking the characteristic and, if asked, that the differential squares to zero.

    Raises:
        InadmissibleCharacteristic: 0 < p < n + a.
        VerificationError: d^2 != 0.
    """
    field.require_admissible(n + a, "X_{}".format(a))
    xa = TruncatedComplexXa(n, a, field)
    if verify:
        report = xa.complex.verify_square_zero(Report("X{}".format(a)))
        if not report.passed:
            raise VerificationError("differential of X_{} does not square to zero".format(a), report)
    logger.info("X_a built:", "n=%d a=%d char=%d" % (n, a, field.characteristic), "ranks",
                xa.module.ranks(), caller=xa)
    return xa


def check_rows(bicomplex, report=None, column_bound=None, seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
               exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT, leibniz_degree=None):
    """ Exhaustive identities of the double complex on basis vectors within bounds.

    kappa^2 = 0, d^2 = 0, kappa d + d kappa = 0, kappa sigma + sigma kappa = 1 (i + m > 0), sigma^2 = 0,
    epsilon kappa = epsilon d on Lambda^1, S_n-equivariance of kappa, d, sigma, and the scaled Leibniz rule on
    (possibly sampled) basis pairs. Components where i + m vanishes in k are skipped.
    """
    report = report or Report("rows")
    ring = bicomplex.ring
    field = bicomplex.field
    n = bicomplex.n
    bound = bicomplex.column_bound if column_bound is None else column_bound
    perms = list(itertools.permutations(range(1, n + 1)))

    def where(v, **extra):
        data = {"basis": v.text}
        data.update(extra)
        return data

    for i in range(0, n + 1):
        for m in range(0, bound + 1):
            for v in bicomplex.basis(i, m):
                x = BiElement.basis(ring, v)
                kx, dx = kappa(x), vertical_d(x)
                report.record("kappa^2=0", not kappa(kx), **where(v))
                report.record("d^2=0", not vertical_d(dx), **where(v))
                report.record("kappa_d+d_kappa=0", not (kappa(dx) + vertical_d(kx)), **where(v))
                if i == 1:
                    report.record("epsilon_kappa=epsilon_d", epsilon(kx) == epsilon(dx), **where(v))
                for perm in perms:
                    y = permute(x, perm)
                    report.record("kappa_equivariant", permute(kx, perm) == kappa(y), **where(v, perm=list(perm)))
                    report.record("d_equivariant", permute(dx, perm) == vertical_d(y), **where(v, perm=list(perm)))
                if i + m == 0 or not field.admits(i + m):
                    continue
                sx = sigma(x)
                report.record("kappa_sigma+sigma_kappa=1", kappa(sx) + sigma(kx) == x, **where(v))
                report.record("sigma^2=0", not sigma(sx), **where(v))
                for perm in perms:
                    report.record("sigma_equivariant", permute(sx, perm) == sigma(permute(x, perm)),
                                  **where(v, perm=list(perm)))

    leibniz_degree = bound if leibniz_degree is None else leibniz_degree
    pool = [v for i in range(0, n + 1) for m in range(0, leibniz_degree + 1) if i + m <= leibniz_degree
            for v in bicomplex.basis(i, m)]
    mode, pairs = tools.select_tuples([pool, pool], exhaustive_limit, samples, seed)
    report.note("scaled_leibniz.mode", mode)
    for u, v in pairs:
        i, a, j, b = u.lambda_degree, u.column, v.lambda_degree, v.column
        if i + a + j + b == 0 or not all(field.admits(k) for k in (i + a, j + b, i + a + j + b) if k):
            continue
        x, y = BiElement.basis(ring, u), BiElement.basis(ring, v)
        r, s = scaled_leibniz_coefficients(i, a, j, b, field)
        lhs = sigma(bi_product(x, y))
        rhs = bi_product(sigma(x), y).scale_scalar(r) + bi_product(x, sigma(y)).scale_scalar(s)
        report.record("scaled_leibniz", lhs == rhs, left=u.text, right=v.text)
    logger.info("row identities checked:", "n=%d bound=%d" % (n, bound), "passed" if report.passed else "FAILED",
                caller=bicomplex)
    return report


def verify_Xa(xa, report=None):
    """ d^2 = 0 on X_a and the quotient-by-columns Leibniz sanity check of the truncated product on units. """
    report = report or Report("X{}".format(xa.a))
    xa.complex.verify_square_zero(report, "X_square_zero")
    unit = xa.unit
    for label in xa.module.labels():
        x = BiElement.basis(xa.ring, label)
        report.record("X_unit", xa.product(unit, x) == x and xa.product(x, unit) == x, basis=label.text)
    return report


__all__ = ("kappa", "vertical_d", "sigma", "epsilon", "epsilon_inverse", "product_Xa", "scaled_leibniz_coefficients",
           "TautologicalBicomplex", "TruncatedComplexXa", "build_Xa", "check_rows", "verify_Xa")
