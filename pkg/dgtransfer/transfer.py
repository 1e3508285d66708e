# -*- coding:utf-8 -*-

"""
Transfer of algebra structures along special deformation retracts.

    * DescendedProduct: alpha * beta = p(i(alpha) i(beta)) on Y, tabulated on basis pairs;
    * DG axiom and multiplicativity verification;
    * homotopy transfer tree terms: i on leaves, h after every internal node but the root, p at the root;
    * A-infinity structures, their simplified descent p m_n (i (x) ... (x) i), and the Stasheff identities.

Global tree signs of the transferred higher operations are not fixed here: `htt_operation` takes the
sign of each tree from the caller, and every vanishing check is made term by term.

Author: dgtransfer developers
Date:   2024/03/09
"""

from dgtransfer import const
from dgtransfer.algebra import label_text, vector_text
from dgtransfer.error import ShapeError
from dgtransfer.homological import in_submodule
from dgtransfer.report import Report
from dgtransfer.trees import enumerate_pbt, enumerate_pt
from dgtransfer.utils import logger
from dgtransfer.utils import tools


class DescendedProduct:
    """ Product on Y obtained from a product on X: alpha * beta = p(i(alpha) i(beta)).

    Attributes:
        sdr: SdrData (a PerturbedSdr is converted with as_sdr()).
        product_on_x: callable (x, y) -> x y on X.
        unit_x: unit of X, if known.
        table: {(u, v): p(i(u) i(v))} on basis labels of Y, filled lazily.
    """

    def __init__(self, sdr, product_on_x, unit_x=None, name=""):
        self.sdr = sdr.as_sdr()
        self.Y = self.sdr.Y
        self.product_on_x = product_on_x
        self.unit_x = unit_x
        self.name = name
        self.table = {}
        self._images = {}

    @property
    def ring(self):
        return self.Y.ring

    def degree(self, label):
        return self.Y.degree_of(label)

    def image(self, label):
        """ i(u) for a basis label u of Y. """
        if label not in self._images:
            self._images[label] = self.sdr.i.apply(self.Y.module.basis_vector(label))
        return self._images[label]

    def basis_product(self, u, v):
        key = (u, v)
        if key not in self.table:
            self.table[key] = self.sdr.p.apply(self.product_on_x(self.image(u), self.image(v)))
        return self.table[key]

    def multiply(self, alpha, beta):
        """ Bilinear extension of the basis table. """
        pairs = []
        for u, f in alpha.terms.items():
            for v, g in beta.terms.items():
                pairs.append((f * g, self.basis_product(u, v)))
        return self.Y.module.element_class.combine(self.ring, pairs)

    def __call__(self, alpha, beta):
        return self.multiply(alpha, beta)

    def unit(self):
        """ p(1); the unit of the descended product. """
        if self.unit_x is None:
            raise ShapeError("unit of X unknown")
        return self.sdr.p.apply(self.unit_x)

    def tabulate(self):
        """ Fill the table on every basis pair whose degrees add up to a degree of Y. """
        labels = self.Y.module.labels()
        top = max(self.Y.degrees()) if self.Y.degrees() else 0
        for u in labels:
            for v in labels:
                if self.degree(u) + self.degree(v) <= top:
                    self.basis_product(u, v)
        return self.table

    def to_dict(self):
        """ {"u*v": product text} for the nonzero entries, in basis order. """
        self.tabulate()
        order = {label: k for k, label in enumerate(self.Y.module.labels())}
        out = {}
        for (u, v) in sorted(self.table, key=lambda key: (order[key[0]], order[key[1]])):
            value = self.table[(u, v)]
            if value:
                out["{}*{}".format(label_text(u), label_text(v))] = vector_text(value)
        return out


def descend_product(sdr, product_on_x, unit_x=None, name=""):
    """ alpha * beta = p_inf(i_inf(alpha) i_inf(beta)) for a PerturbedSdr, p(i(alpha) i(beta)) for an SdrData. """
    prod = DescendedProduct(sdr, product_on_x, unit_x, name)
    logger.debug("descended product on", prod.Y, caller=prod)
    return prod


def verify_dg_axioms(prod, report=None, seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
                     exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT):
    """ Leibniz, graded commutativity, x^2 = 0 for odd x, associativity and unit on basis pairs/triples.

    Tuples are exhaustive when there are at most `exhaustive_limit` of them, seeded samples otherwise.
    """
    report = report or Report(prod.name or "dg")
    Y = prod.Y
    labels = Y.module.labels()
    deg = prod.degree
    basis = Y.module.basis_vector
    d = Y.d

    mode, pairs = tools.select_tuples([labels, labels], exhaustive_limit, samples, seed)
    report.note("pairs.mode", mode)
    for u, v in pairs:
        x, y = basis(u), basis(v)
        du, dv = deg(u), deg(v)
        lhs = d(prod(x, y))
        right = prod(x, d(y))
        rhs = prod(d(x), y) + (right if du % 2 == 0 else -right)
        report.record("leibniz", lhs == rhs, left=label_text(u), right=label_text(v))
        xy, yx = prod(x, y), prod(y, x)
        report.record("graded_commutative", xy == (yx if (du * dv) % 2 == 0 else -yx),
                      left=label_text(u), right=label_text(v))

    for u in labels:
        if deg(u) % 2:
            x = basis(u)
            report.record("odd_square_zero", not prod(x, x), element=label_text(u))

    mode, triples = tools.select_tuples([labels, labels, labels], exhaustive_limit, samples, seed)
    report.note("triples.mode", mode)
    for u, v, w in triples:
        x, y, z = basis(u), basis(v), basis(w)
        report.record("associative", prod(prod(x, y), z) == prod(x, prod(y, z)),
                      left=label_text(u), middle=label_text(v), right=label_text(w))

    if prod.unit_x is not None:
        one = prod.unit()
        for u in labels:
            x = basis(u)
            report.record("unit", prod(one, x) == x and prod(x, one) == x, element=label_text(u))
    logger.info("dg axioms:", "passed" if report.passed else "FAILED", caller=prod)
    return report


def verify_i_multiplicative(prod, report=None, seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
                            exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT):
    """ i(alpha beta) = i(alpha) i(beta) on basis pairs of Y. """
    report = report or Report(prod.name or "i_multiplicative")
    labels = prod.Y.module.labels()
    i = prod.sdr.i
    mode, pairs = tools.select_tuples([labels, labels], exhaustive_limit, samples, seed)
    report.note("i_multiplicative.mode", mode)
    for u, v in pairs:
        lhs = i.apply(prod.basis_product(u, v))
        rhs = prod.product_on_x(prod.image(u), prod.image(v))
        report.record("i_multiplicative", lhs == rhs, left=label_text(u), right=label_text(v))
    return report


def check_generalized_leibniz(h, product, alpha, beta, basis, coefficients=None):
    """ h(alpha beta) lies in h(alpha) X + X h(beta).

    Args:
        h: callable on elements of X.
        product: callable (x, y) -> x y.
        alpha, beta: homogeneous elements.
        basis: basis elements of X used as multipliers.
        coefficients: (r, s) of a scaled rule h(xy) = r h(x) y + s x h(y), checked exactly when given.
    """
    v = h(product(alpha, beta))
    if coefficients is not None:
        r, s = coefficients
        exact = product(h(alpha), beta).scale_scalar(r) + product(alpha, h(beta)).scale_scalar(s)
        if v != exact:
            return False
    if not v:
        return True
    top = max(v.internal_degrees(lambda label: label.internal_degree))
    ha, hb = h(alpha), h(beta)
    gens = []
    for u in basis:
        if u.internal_degree() is not None and u.internal_degree() <= top:
            if ha:
                gens.append(product(ha, u))
            if hb:
                gens.append(product(u, hb))
    return in_submodule(v, [g for g in gens if g])


# ---------------------------------------------------------------------------------------------------------------------
# A-infinity structures and tree terms
# ---------------------------------------------------------------------------------------------------------------------

class AinfinityStructure:
    """ Operations m_k on a chain complex; m_1 is the differential.

    Attributes:
        carrier: ChainComplex.
        operations: {k: callable(list of elements) -> element} for k >= 2; missing arities are zero.
        arity_bound: Largest arity the structure is used with.
    """

    def __init__(self, carrier, operations, arity_bound=4, name=""):
        self.carrier = carrier
        self.operations = {k: op for k, op in operations.items() if k >= 2}
        self.arity_bound = arity_bound
        self.name = name

    @classmethod
    def from_dg(cls, carrier, product, arity_bound=4, name=""):
        """ A DG algebra as an A-infinity algebra: m_2 = product, m_k = 0 for k >= 3. """
        return cls(carrier, {2: lambda args: product(args[0], args[1])}, arity_bound, name)

    def degree(self, x):
        """ Homological degree of a homogeneous element (0 for zero). """
        if not x:
            return 0
        d = self.carrier.module.homological_degree(x)
        if d is None:
            raise ShapeError("element is not homogeneous")
        return d

    def apply(self, k, args):
        if len(args) != k:
            raise ShapeError("m_{} takes {} arguments, got {}".format(k, k, len(args)))
        if k == 1:
            return self.carrier.d(args[0])
        op = self.operations.get(k)
        if op is None or any(not x for x in args):
            return self.carrier.module.element()
        return op(list(args))


def _evaluate(tree, offset, inputs, degrees, sdr, ops, root):
    """ (value, total degree of the maps of the subtree, trailing h included). """
    if tree.is_leaf():
        return sdr.i.apply(inputs[offset]), 0
    values = []
    negative = False
    position = offset
    left_degree = 0
    total = 0
    for child in tree.children:
        value, deg = _evaluate(child, position, inputs, degrees, sdr, ops, False)
        if deg * left_degree % 2:
            negative = not negative
        values.append(value)
        total += deg
        left_degree += sum(degrees[position:position + child.arity])
        position += child.arity
    k = len(tree.children)
    out = ops.apply(k, values)
    if negative:
        out = -out
    total += k - 2
    if root:
        return sdr.p.apply(out), total
    return sdr.h.apply(out), total + 1


def htt_term(tree, inputs, sdr, ops):
    """ Unsigned tree term: i on the leaves, m_k at each node, h after every node but the root, p at the root.

    Koszul signs: the maps of a subtree in slot j contribute (-1)^{(their total degree)(degrees of the inputs
    to its left)}; m_k has degree k - 2, h degree +1.
    """
    sdr = sdr.as_sdr()
    if tree.arity != len(inputs):
        raise ShapeError("tree of arity {} got {} inputs".format(tree.arity, len(inputs)))
    degrees = []
    for x in inputs:
        d = sdr.Y.module.homological_degree(x) if x else 0
        if d is None:
            raise ShapeError("htt_term needs homogeneous inputs")
        degrees.append(d)
    value, _ = _evaluate(tree, 0, list(inputs), degrees, sdr, ops, True)
    return value


def tree_terms(n, inputs, sdr, ops, binary=True):
    """ [(tree, unsigned term)] over planar binary (or all planar) trees with n leaves. """
    trees = enumerate_pbt(n) if binary else enumerate_pt(n)
    return [(tree, htt_term(tree, inputs, sdr, ops)) for tree in trees]


def htt_operation(n, inputs, sdr, ops, sign_rule, binary=True):
    """ sum over trees of sign_rule(tree) * term; `sign_rule` returns +1 or -1. """
    sdr = sdr.as_sdr()
    total = sdr.Y.module.element()
    for tree, term in tree_terms(n, inputs, sdr, ops, binary):
        total = total + (term if sign_rule(tree) > 0 else -term)
    return total


def check_higher_ops_vanish(n, sdr, ops, inputs):
    """ True iff every planar binary tree term with n leaves vanishes on `inputs`. """
    return all(not term for _, term in tree_terms(n, inputs, sdr, ops, binary=True))


def ainfty_descend_simplified(sdr, A, name=""):
    """ m_n^Y = p m_n^X (i (x) ... (x) i) for n >= 2, m_1^Y the differential of Y. """
    sdr = sdr.as_sdr()

    def descended(op):
        return lambda args: sdr.p.apply(op([sdr.i.apply(x) for x in args]))

    return AinfinityStructure(sdr.Y, {k: descended(op) for k, op in A.operations.items()}, A.arity_bound, name)


def stasheff_sum(A, inputs):
    """ sum_{r+s+t=n} (-1)^{r+st} m_{r+1+t}(1^r (x) m_s (x) 1^t) on inputs, with Koszul signs. """
    n = len(inputs)
    degrees = [A.degree(x) for x in inputs]
    total = A.carrier.module.element()
    for r in range(0, n):
        for s in range(1, n - r + 1):
            t = n - r - s
            inner = A.apply(s, inputs[r:r + s])
            if not inner:
                continue
            term = A.apply(r + 1 + t, list(inputs[:r]) + [inner] + list(inputs[r + s:]))
            if not term:
                continue
            parity = (r + s * t + (s - 2) * sum(degrees[:r])) % 2
            total = total + (-term if parity else term)
    return total


def check_stasheff(A, n, inputs):
    """ True iff the n-th Stasheff identity holds on `inputs`. """
    if len(inputs) != n:
        raise ShapeError("Stasheff identity {} needs {} inputs".format(n, n))
    return not stasheff_sum(A, inputs)
