# -*- coding:utf-8 -*-

"""
The minimal free resolution L_a of R/m^a with its DG algebra structure.

L_a is obtained by perturbation: the rows of X_a (differential kappa only) retract onto
L_{i,a} = ker kappa_{i,a} = im kappa_{i+1,a-1}, placed in homological degree i+1, plus R in degree 0
via epsilon. Perturbing by delta = d gives the differential, the maps i_inf, p_inf, h_inf and the
product alpha beta = p_inf(i_inf(alpha) i_inf(beta)).

Basis labels of L_a: "1" for R; the basis vector 1 (x) y^mu itself for L_{0,a}; "b1", "b2", ... numbered
through L_{1,a}, L_{2,a}, ... for the kernel vectors (coordinates read at their pivot-free position).

Author: dgtransfer developers
Date:   2024/03/11
"""

import math
import itertools

from dgtransfer import const
from dgtransfer import linalg
from dgtransfer.algebra import (BiBasisVector, BiElement, FieldSpec, Vector, in_maximal_ideal_power, label_text,
                                parse_element, permute, vector_text)
from dgtransfer.bicomplex import TautologicalBicomplex, build_Xa, kappa
from dgtransfer.error import DivisorVanishes, ParseError, ShapeError, VerificationError
from dgtransfer.homological import (BasedModule, ChainComplex, GradedMap, GradedModule, ModuleMap, SdrData, located,
                                    retract_from_truncation, verify_sdr)
from dgtransfer.perturbation import Perturbation, perturb, verify_perturbed_special
from dgtransfer.report import Report
from dgtransfer.transfer import descend_product
from dgtransfer.utils import logger
from dgtransfer.utils import tools

UNIT = const.UNIT_LABEL


def expected_rank(n, a, i):
    """ rank L_{i,a} = sum_{t >= 1} (-1)^{t+1} C(n, i+t) C(n+a-t-1, a-t). """
    if not 0 <= i <= n - 1:
        raise ShapeError("L_{{i,a}} needs 0 <= i <= n-1, got i={}".format(i))
    total = 0
    for t in range(1, min(a, n - i) + 1):
        total += (-1) ** (t + 1) * math.comb(n, i + t) * math.comb(n + a - t - 1, a - t)
    return total


def _kernel_with_free(bicomplex, i, a):
    """ [(kernel vector, free label)] of kappa_{i,a}, rref with the basis order of Lambda^i (x) S_a. """
    ring = bicomplex.ring
    K = ring.field.domain
    source = bicomplex.module(i, a)
    target = bicomplex.module(i - 1, a + 1)
    block = bicomplex.kappa_map(i, a)
    rows = [[K.zero] * len(source) for _ in target.labels]
    for j, label in enumerate(source.labels):
        for t, f in block.columns.get(label, {}).items():
            rows[target.index[t]][j] = ring.constant_value(f)
    vectors, free = linalg.kernel_basis(rows, len(source), K)
    out = []
    for vector, f in zip(vectors, free):
        element = BiElement(ring, {source.labels[j]: ring.poly_ring.ground_new(x) for j, x in enumerate(vector) if x})
        out.append((element, source.labels[f]))
    return out


def kernel_basis_Lia(n, a, i, field):
    """ Constant k-basis of ker kappa_{i,a} inside Lambda^i (x) S_a, one vector per pivot-free column. """
    if not 0 <= i <= n - 1 or a < 1:
        raise ShapeError("kernel_basis_Lia needs 0 <= i <= n-1 and a >= 1")
    return [element for element, _ in _kernel_with_free(TautologicalBicomplex(n, a + 1, field), i, a)]


def bottom_retract(bicomplex):
    """ Lambda^0 (x) S_0 = R (x) 1 retracting onto R: i = epsilon^{-1}, p = epsilon, h = 0. """
    ring = bicomplex.ring
    row = bicomplex.row(0)
    unit = BiBasisVector((), (0,) * ring.n)
    Y = ChainComplex(GradedModule({0: BasedModule([UNIT], {UNIT: 0}, ring)}, ring), name="R")
    one = ring.one
    i = GradedMap(Y.module, row.module, 0, {0: ModuleMap(Y.component(0), row.component(0), {UNIT: {unit: one}})})
    p = GradedMap(row.module, Y.module, 0, {0: ModuleMap(row.component(0), Y.component(0), {unit: {UNIT: one}})})
    h = GradedMap.zero(row.module, row.module, 1)
    return SdrData(row, Y, i, p, h, special=True, name="row0")


class LaResolution:
    """ L_a with chosen bases, differential, product and the transfer maps.

    Attributes:
        n, a, field, ring: Parameters.
        xa: TruncatedComplexXa.
        sdr: The special retract of (X_a, kappa) onto (L_a, 0).
        perturbed: PerturbedSdr for delta = d.
        complex: L_a with its differential d_inf.
        product: DescendedProduct.
        bases: {i: [(label, constant BiElement in Lambda^i (x) S_a, free label)]}.
        report: Build-time verification report, if any.
    """

    def __init__(self, n, a, field, xa, sdr, perturbed, product, bases):
        self.n = n
        self.a = a
        self.field = field
        self.ring = xa.ring
        self.xa = xa
        self.sdr = sdr
        self.perturbed = perturbed
        self.complex = perturbed.Y_inf
        self.product = product
        self.bases = bases
        self.report = None
        self._vectors = {}
        self._coordinates = {}
        for i, entries in bases.items():
            for label, element, free in entries:
                self._vectors[label] = element
                self._coordinates[free] = label

    def __repr__(self):
        return "<LaResolution n={} a={} char={} ranks={}>".format(self.n, self.a, self.field.characteristic,
                                                                self.ranks)

    @property
    def differential(self):
        return self.complex.differential

    @property
    def i_inf(self):
        return self.perturbed.i_inf

    @property
    def p_inf(self):
        return self.perturbed.p_inf

    @property
    def h_inf(self):
        return self.perturbed.h_inf

    @property
    def module(self):
        return self.complex.module

    @property
    def ranks(self):
        return self.complex.module.ranks()

    def expected_ranks(self):
        return [1] + [expected_rank(self.n, self.a, i) for i in range(0, self.n)]

    def degree_of(self, label):
        return self.complex.degree_of(label)

    def basis_vector(self, label):
        return self.complex.module.basis_vector(label)

    @property
    def unit(self):
        return self.basis_vector(UNIT)

    def embed(self, v):
        """ The element of Lambda (x) S represented by v: "1" -> 1 (x) 1, L labels -> their kernel vectors. """
        pairs = []
        for label, f in v.terms.items():
            if label == UNIT:
                pairs.append((f, BiElement.unit(self.ring)))
            elif label in self._vectors:
                pairs.append((f, self._vectors[label]))
            else:
                raise ShapeError("{} is not a basis label of L_{}".format(label_text(label), self.a))
        return BiElement.combine(self.ring, pairs)

    def to_basis(self, x):
        """ Coordinates of an element of R (x) 1 + sum_i ker kappa_{i,a} in the chosen basis.

        Raises:
            ShapeError: x is not of that form.
        """
        terms = {}
        zero_sym = (0,) * self.n
        for v, f in x.terms.items():
            if v.lambda_degree == 0 and v.sym == zero_sym:
                terms[UNIT] = f
            elif v in self._coordinates:
                terms[self._coordinates[v]] = f
        out = self.complex.module.element(terms)
        if self.embed(out) != x:
            raise ShapeError("element is not in L_{}".format(self.a))
        return out

    def parse(self, text):
        """ Element of L_a from text: `e[..]*y^[..]` terms (kernel vectors), labels `1`, `b1`, ...
        and x-coefficients.
        """
        ring = self.ring
        labels = set(self.complex.module.labels())

        def resolve(word):
            if word in labels:
                return word
            raise ParseError("unknown basis label {!r} for L_{}".format(word, self.a))

        raw = parse_element(text, ring, resolve)
        named = Vector(ring, {k: f for k, f in raw.terms.items() if not isinstance(k, BiBasisVector)})
        bi = BiElement(ring, {k: f for k, f in raw.terms.items() if isinstance(k, BiBasisVector)})
        try:
            converted = self.to_basis(bi)
        except ShapeError:
            raise ParseError("{!r} is not an element of L_{}".format(text, self.a))
        return self.complex.module.element(dict(named.terms)) + converted

    def text(self, v):
        return vector_text(v, self.complex.module.labels())

    def multiply(self, alpha, beta, cross_check=True):
        return multiply_La(self, alpha, beta, cross_check)

    def permute(self, v, perm):
        """ Transport an element of L_a along a permutation of the variables. """
        return self.to_basis(permute(self.embed(v), perm))


def build_La(n, a, field, verify=True, max_failures=const.DEFAULT_MAX_FAILURES):
    """ Assemble the special retract of (X_a, kappa) onto (L_a, 0), perturb by d, descend the product.

    Raises:
        InadmissibleCharacteristic: 0 < p < n + a.
        VerificationError: some build-time identity fails (report attached).
    """
    field.require_admissible(n + a, "L_{}".format(a))
    xa = build_Xa(n, a, field, verify=verify)
    ring = xa.ring
    bicomplex = xa.bicomplex
    counter = [0]
    bases = {}

    def labeller(k, element, free_label):
        if free_label.lambda_degree == 0:
            return free_label
        counter[0] += 1
        return "b{}".format(counter[0])

    retracts = [bottom_retract(bicomplex)]
    for r in range(1, a + n):
        row = bicomplex.row(r)
        c = r - a + 1
        sdr_r = retract_from_truncation(row, bicomplex.row_contraction(row, r), c, labeller, name="row{}".format(r))
        if sdr_r.stalk:
            bases[c - 1] = list(sdr_r.stalk)
        retracts.append(sdr_r)

    components = {}
    for sdr_r in retracts:
        components.update(sdr_r.Y.module.components)
    Y0 = ChainComplex(GradedModule(components, ring), name="L{}".format(a))
    X0 = ChainComplex(xa.module, xa.horizontal, name="X{}".format(a))
    i = GradedMap.assemble(Y0.module, xa.module, 0, [s.i for s in retracts])
    p = GradedMap.assemble(xa.module, Y0.module, 0, [s.p for s in retracts])
    h = GradedMap.assemble(xa.module, xa.module, 1, [s.h for s in retracts])
    sdr = SdrData(X0, Y0, i, p, h, special=all(s.special for s in retracts), name="X{}->L{}".format(a, a))
    logger.info("row retracts assembled:", "ranks", Y0.module.ranks(), "special", sdr.special, caller=sdr)

    perturbed = perturb(sdr, Perturbation(X0, xa.vertical))
    product = descend_product(perturbed, xa.product, xa.unit, name="L{}".format(a))
    res = LaResolution(n, a, field, xa, sdr, perturbed, product, bases)

    if verify:
        report = Report("build", max_failures)
        report.merge(verify_sdr(sdr, special=True, report=Report("sdr", max_failures)), "unperturbed")
        report.merge(verify_perturbed_special(perturbed, Report("perturbed", max_failures)), "perturbed")
        report.record("ranks", res.ranks == res.expected_ranks(), ranks=res.ranks, expected=res.expected_ranks())
        report.record_many("minimal", res.differential.entry_count(),
                           located(ring, res.complex.minimality_failures()))
        report.record_many("p_inf_piecewise", xa.module.rank(),
                           located(ring, res.p_inf.differences(p_infinity_piecewise(res))))
        res.report = report
        if not report.passed:
            raise VerificationError("L_{} failed build verification: {}".format(a, ", ".join(report.failing_checks())),
                                    report)
    logger.info("L_a built:", "n=%d a=%d char=%d" % (n, a, field.characteristic), "ranks", res.ranks, caller=res)
    return res


def p_infinity_piecewise(res):
    """ p_inf in closed form: (-1)^j epsilon on Lambda^0 (x) S_j, kappa on the column a-1 for i > 0, zero elsewhere. """
    ring = res.ring
    a = res.a

    def image(v):
        if v.lambda_degree == 0:
            f = ring.evaluate_y(v.sym)
            return Vector(ring, {UNIT: f if v.column % 2 == 0 else -f})
        if v.column == a - 1:
            return res.to_basis(kappa(BiElement.basis(ring, v)))
        return Vector(ring)

    return GradedMap.from_function(res.xa.module, res.module, 0, image)


def multiply_La(res, alpha, beta, cross_check=True):
    """ alpha beta = p_inf(i_inf(alpha) i_inf(beta)).

    With `cross_check`, the product of the positive-degree parts is recomputed as kappa of the column a-1
    component of i_inf(alpha) i_inf(beta).

    Raises:
        VerificationError: the two computations disagree.
    """
    result = res.product(alpha, beta)
    if cross_check:
        module = res.module
        a_plus = alpha.restrict(lambda label: module.degree_of(label) > 0)
        b_plus = beta.restrict(lambda label: module.degree_of(label) > 0)
        if a_plus and b_plus:
            lifted = res.xa.product(res.i_inf.apply(a_plus), res.i_inf.apply(b_plus))
            explicit = res.to_basis(kappa(lifted.component(j=res.a - 1)))
            if explicit != res.product(a_plus, b_plus):
                report = Report("multiply")
                report.record("kappa_formula", False, left=res.text(a_plus), right=res.text(b_plus),
                              descended=res.text(res.product(a_plus, b_plus)), explicit=res.text(explicit))
                raise VerificationError("descended product disagrees with the kappa formula", report)
    return result


# ---------------------------------------------------------------------------------------------------------------------
# Comparison maps L_b -> L_a
# ---------------------------------------------------------------------------------------------------------------------

class ComparisonMap:
    """ The DG algebra map f_{b,a} = p_inf^(a) pi i_inf^(b): L_b -> L_a lifting R/m^b -> R/m^a.

    Attributes:
        b, a: Levels, b >= a.
        source, target: LaResolution for b and a.
        quotient: pi: X_b -> X_a.
        maps: GradedMap of shift 0.
    """

    def __init__(self, b, a, source, target, quotient, maps):
        self.b = b
        self.a = a
        self.source = source
        self.target = target
        self.quotient = quotient
        self.maps = maps

    def __repr__(self):
        return "<ComparisonMap f_{},{} n={}>".format(self.b, self.a, self.source.n)

    def apply(self, v):
        return self.maps.apply(v)

    def __call__(self, v):
        return self.apply(v)

    def formula(self):
        """ p^(a) pi (h^(b) d)^{b-a} i^(b), built from the unperturbed retracts. """
        src, tgt = self.source, self.target
        hd = src.sdr.h.compose(src.xa.vertical)
        return tgt.sdr.p.compose(self.quotient).compose(hd.power(self.b - self.a)).compose(src.sdr.i)

    def to_dict(self):
        return {
            "b": self.b,
            "a": self.a,
            "matrices": self.maps.to_dict()
        }


def comparison_map(n, b, a, field, source=None, target=None):
    """ f_{b,a}; `source`/`target` reuse already built resolutions.

    Raises:
        ShapeError: b < a or the resolutions do not match (n, b, a, field).
        InadmissibleCharacteristic: field too small for L_b.
    """
    if b < a or a < 1:
        raise ShapeError("comparison maps need b >= a >= 1, got b={} a={}".format(b, a))
    source = source or build_La(n, b, field)
    target = target or (source if b == a else build_La(n, a, field))
    for res, level in ((source, b), (target, a)):
        if res.n != n or res.a != level or res.field != field:
            raise ShapeError("resolution {!r} does not match n={} level={}".format(res, n, level))
    quotient = source.xa.quotient_to(target.xa)
    maps = target.p_inf.compose(quotient).compose(source.i_inf)
    logger.info("comparison map built:", "f_%d,%d" % (b, a), caller=ComparisonMap)
    return ComparisonMap(b, a, source, target, quotient, maps)


def verify_comparison(cmp, report=None, seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
                      exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT):
    """ Chain map, f_0 = 1, positive-degree entries in m^{b-a}, the closed formula, multiplicativity on basis
    pairs of L_b, and that pi is a DG algebra map.
    """
    report = report or Report("f{},{}".format(cmp.b, cmp.a))
    src, tgt = cmp.source, cmp.target
    ring = src.ring
    f = cmp.maps

    chain = tgt.differential.compose(f).differences(f.compose(src.differential))
    report.record_many("chain_map", src.module.rank(), located(ring, chain))
    report.record("f0_identity", f.apply(src.unit) == tgt.unit)
    power = cmp.b - cmp.a
    report.record_many("m_power", f.restrict(lo=1).entry_count(),
                       located(ring, [x for x in f.restrict(lo=1).entries()
                                      if not in_maximal_ideal_power(x[3], power)], power=power))
    report.record_many("formula", src.module.rank(),
                       located(ring, f.restrict(lo=1).differences(cmp.formula().restrict(lo=1))))

    labels = src.module.labels()
    mode, pairs = tools.select_tuples([labels, labels], exhaustive_limit, samples, seed)
    report.note("multiplicative.mode", mode)
    for u, v in pairs:
        x, y = src.basis_vector(u), src.basis_vector(v)
        ok = f.apply(src.product(x, y)) == tgt.product(f.apply(x), f.apply(y))
        report.record("multiplicative", ok, left=label_text(u), right=label_text(v))

    pi = cmp.quotient
    xb, xa = src.xa, tgt.xa
    report.record_many("quotient_chain_map", xb.module.rank(),
                       located(ring, xa.complex.differential.compose(pi).differences(
                           pi.compose(xb.complex.differential))))
    xlabels = xb.module.labels()
    mode, pairs = tools.select_tuples([xlabels, xlabels], exhaustive_limit, samples, seed)
    report.note("quotient_multiplicative.mode", mode)
    for u, v in pairs:
        x, y = BiElement.basis(ring, u), BiElement.basis(ring, v)
        ok = pi.apply(xb.product(x, y)) == xa.product(pi.apply(x), pi.apply(y))
        report.record("quotient_multiplicative", ok, left=u.text, right=v.text)
    logger.info("comparison verified:", "f_%d,%d" % (cmp.b, cmp.a), "passed" if report.passed else "FAILED",
                caller=cmp)
    return report


def verify_composition(f_cb, f_ba, f_ca, report=None):
    """ f_{c,a} = f_{b,a} f_{c,b} as matrices. """
    report = report or Report("composition")
    composite = f_ba.maps.compose(f_cb.maps)
    report.record_many("composition", f_cb.source.module.rank(),
                       located(f_ca.source.ring, f_ca.maps.differences(composite),
                               maps="f{},{} = f{},{} f{},{}".format(f_ca.b, f_ca.a, f_ba.b, f_ba.a, f_cb.b, f_cb.a)))
    return report


# ---------------------------------------------------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------------------------------------------------

def hilbert_function(n, a, t):
    """ dim_k (R/m^a)_t. """
    return math.comb(n + t - 1, t) if t < a else 0


def verify_resolution(res, max_internal_degree=None, report=None):
    """ d^2 = 0, minimality, ranks, and per strand t <= max_internal_degree: exactness in positive homological
    degrees and H_0 equal to the Hilbert function of R/m^a.
    """
    n, a = res.n, res.a
    top = a + n if max_internal_degree is None else max_internal_degree
    if top < a + n:
        logger.warn("max internal degree", top, "is below a + n =", a + n, "; strands above are unchecked",
                    caller=res)
    report = report or Report("resolution")
    ring = res.ring
    res.complex.verify_square_zero(report, "square_zero")
    report.record_many("minimal", res.differential.entry_count(), located(ring, res.complex.minimality_failures()))
    expected = res.expected_ranks()
    for i, (got, want) in enumerate(zip(res.ranks, expected)):
        report.record("ranks", got == want, degree=i, rank=got, expected=want)
    if len(res.ranks) != len(expected):
        report.record("ranks", False, ranks=res.ranks, expected=expected)

    h0 = []
    for t in range(0, top + 1):
        strand = res.complex.strand(t)
        homology = strand.homology_dims()
        report.record("strand_square_zero", strand.square_zero(), t=t)
        for d, dim in enumerate(homology):
            if d >= 1:
                report.record("exact", dim == 0, t=t, degree=d, dim=dim)
        got = homology[0] if homology else 0
        h0.append(got)
        report.record("h0_hilbert", got == hilbert_function(n, a, t), t=t, dim=got,
                      expected=hilbert_function(n, a, t))
    report.note("h0_dims", h0)
    logger.info("resolution verified:", "L_%d n=%d" % (a, n), "passed" if report.passed else "FAILED", caller=res)
    return report


def check_product_equivariance(res, report=None, seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
                               exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT):
    """ pi(alpha beta) = pi(alpha) pi(beta) for permutations pi of the variables, on basis pairs. """
    report = report or Report("equivariance")
    labels = res.module.labels()
    perms = list(itertools.permutations(range(1, res.n + 1)))
    mode, tuples = tools.select_tuples([perms, labels, labels], exhaustive_limit, samples, seed)
    report.note("equivariance.mode", mode)
    for perm, u, v in tuples:
        x, y = res.basis_vector(u), res.basis_vector(v)
        lhs = res.permute(res.product(x, y), perm)
        rhs = res.product(res.permute(x, perm), res.permute(y, perm))
        report.record("product_equivariant", lhs == rhs, perm=list(perm), left=label_text(u), right=label_text(v))
    return report


def _reduce_vector(v, module):
    ring = module.ring
    source_field = v.ring.field
    return module.element({label: ring.from_terms({m: ring.field(source_field.to_rational(c)) for m, c in f.items()})
                           for label, f in v.terms.items()})


def compare_mod_p(res_p, res_q=None, report=None):
    """ Every matrix of L_a over GF(p) equals the rational one reduced mod p. """
    report = report or Report("mod_p")
    res_q = res_q or build_La(res_p.n, res_p.a, FieldSpec(0), verify=False)
    ring = res_p.ring
    if res_q.module.labels() != res_p.module.labels():
        report.record("same_bases", False, rational=[label_text(x) for x in res_q.module.labels()],
                      modular=[label_text(x) for x in res_p.module.labels()])
        return report
    report.record("same_bases", True)
    for name in ("differential", "i_inf", "p_inf", "h_inf"):
        mine, theirs = getattr(res_p, name), getattr(res_q, name)
        try:
            reduced = theirs.reduce(mine.source, mine.target)
        except DivisorVanishes:
            report.record(name, False, reason="denominator divisible by p")
            continue
        report.record_many(name, mine.source.rank(), located(ring, mine.differences(reduced)))
    for (u, v), value in sorted(res_p.product.tabulate().items(),
                                key=lambda kv: (label_text(kv[0][0]), label_text(kv[0][1]))):
        try:
            other = _reduce_vector(res_q.product.basis_product(u, v), res_p.module)
        except DivisorVanishes:
            report.record("product", False, left=label_text(u), right=label_text(v), reason="denominator")
            continue
        report.record("product", other == value, left=label_text(u), right=label_text(v))
    return report


# ---------------------------------------------------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------------------------------------------------

def basis_dict(res):
    """ {degree: [{"label", "vector", "internal_degree"}]} with the chosen vectors inside Lambda (x) S. """
    out = {"0": [{"label": UNIT, "vector": vector_text(BiElement.unit(res.ring)), "internal_degree": 0}]}
    for i, entries in sorted(res.bases.items()):
        out[str(i + 1)] = [{"label": label_text(label), "vector": vector_text(element),
                            "internal_degree": i + res.a} for label, element, _ in entries]
    return out


def strands_dict(res, max_internal_degree):
    """ {t: {"dims": [...], "homology": [...]}} for t = 0..max_internal_degree. """
    out = {}
    for t in range(0, max_internal_degree + 1):
        strand = res.complex.strand(t)
        dims = strand.dims()
        top = max(dims) if dims else -1
        out[str(t)] = {
            "dims": [dims.get(d, 0) for d in range(0, top + 1)],
            "homology": strand.homology_dims()
        }
    return out


def to_dict(res):
    """ JSON-ready document of a built L_a; identical for identical (n, a, characteristic). """
    data = {
        "n": res.n,
        "a": res.a,
        "characteristic": res.field.characteristic,
        "ranks": res.ranks,
        "expected_ranks": res.expected_ranks(),
        "nilpotency_order": res.perturbed.nilpotency_order,
        "basis": basis_dict(res),
        "differential": res.differential.to_dict(),
        "product": res.product.to_dict(),
        "i_inf": res.i_inf.to_dict(),
        "p_inf": res.p_inf.to_dict()
    }
    if res.report is not None:
        data["verification"] = res.report.data
    return data


__all__ = ("LaResolution", "ComparisonMap", "expected_rank", "kernel_basis_Lia", "build_La", "multiply_La",
           "p_infinity_piecewise", "comparison_map", "verify_comparison", "verify_composition", "verify_resolution",
           "check_product_equivariance", "compare_mod_p", "hilbert_function", "to_dict", "strands_dict")
