# -*- coding:utf-8 -*-

"""
Named verification suites.

Every suite takes a job (cli.JobConfig: n, a, b, c, field, seed, samples, exhaustive_limit, max_failures,
max_internal_degree and a cache of built resolutions) and returns a Report. Failing identities are
report content; only construction problems raise.

Author: dgtransfer developers
Date:   2024/03/12
"""

from dgtransfer import const
from dgtransfer.algebra import label_text
from dgtransfer.bicomplex import TautologicalBicomplex, check_rows, kappa, verify_Xa
from dgtransfer.homological import located, verify_sdr
from dgtransfer.perturbation import check_series_truncation, verify_perturbed_special
from dgtransfer.report import Report
from dgtransfer.resolution import (check_product_equivariance, compare_mod_p, comparison_map, kernel_basis_Lia,
                                   multiply_La, p_infinity_piecewise, verify_comparison, verify_composition,
                                   verify_resolution)
from dgtransfer.error import VerificationError
from dgtransfer.transfer import (AinfinityStructure, ainfty_descend_simplified, check_higher_ops_vanish,
                                 check_stasheff, descend_product, verify_dg_axioms, verify_i_multiplicative)
from dgtransfer.trees import catalan, enumerate_pbt, enumerate_pt, little_schroeder
from dgtransfer.utils import tools
from dgtransfer.utils.decorator import timed

ROW_COLUMN_BOUND = 4
LEIBNIZ_DEGREE = 3
TREE_COUNT_LEAVES = 5
STASHEFF_ARITY = 4


def _sampling(job):
    return dict(seed=job.seed, samples=job.samples, exhaustive_limit=job.exhaustive_limit)


@timed("rows")
def run_rows(job):
    """ Double complex identities, exhaustive on basis vectors up to column 4 (or a+1). """
    report = Report(const.SUITE_ROWS, job.max_failures)
    bicomplex = TautologicalBicomplex(job.n, max(ROW_COLUMN_BOUND, job.a + 1), job.field)
    check_rows(bicomplex, report, leibniz_degree=LEIBNIZ_DEGREE, **_sampling(job))
    for i in range(0, job.n):
        vectors = kernel_basis_Lia(job.n, job.a, i, job.field)
        report.record("kernel_in_ker_kappa", all(not kappa(v) for v in vectors), i=i)
    return report


@timed("sdr")
def run_sdr(job):
    """ The row retracts, the assembled special retract, the product descended along it, and the Perturbation
    Lemma outputs.
    """
    report = Report(const.SUITE_SDR, job.max_failures)
    res = job.resolution(job.a)
    verify_Xa(res.xa, report)
    report.merge(verify_sdr(res.sdr, special=True, report=Report("unperturbed", job.max_failures)), "unperturbed")
    report.merge(verify_perturbed_special(res.perturbed, Report("perturbed", job.max_failures)), "perturbed")
    unperturbed = descend_product(res.sdr, res.xa.product, res.xa.unit, name="L{}_unperturbed".format(job.a))
    report.merge(verify_dg_axioms(unperturbed, Report("descent", job.max_failures), **_sampling(job)), "descent")
    report.record_many("p_inf_piecewise", res.xa.module.rank(),
                       located(res.ring, res.p_inf.differences(p_infinity_piecewise(res))))
    report.record("series_truncation", check_series_truncation(res.perturbed))
    order = res.perturbed.nilpotency_order
    report.record("nilpotency_order<=a", order <= job.a, order=order)
    report.note("nilpotency_order", order)
    return report


@timed("dg")
def run_dg(job):
    """ DG algebra axioms of L_a, multiplicativity of i_inf, S_n-equivariance and the kappa formula. """
    report = Report(const.SUITE_DG, job.max_failures)
    res = job.resolution(job.a)
    sampling = _sampling(job)
    verify_dg_axioms(res.product, report, **sampling)
    verify_i_multiplicative(res.product, report, **sampling)
    check_product_equivariance(res, report, **sampling)
    labels = res.module.labels()
    mode, pairs = tools.select_tuples([labels, labels], job.exhaustive_limit, job.samples, job.seed)
    report.note("kappa_formula.mode", mode)
    for u, v in pairs:
        try:
            multiply_La(res, res.basis_vector(u), res.basis_vector(v), cross_check=True)
            ok = True
        except VerificationError:
            ok = False
        report.record("kappa_formula", ok, left=label_text(u), right=label_text(v))
    return report


@timed("resolution")
def run_resolution(job):
    """ Resolution certificate of L_a; over GF(p) also the comparison with the rational matrices. """
    report = Report(const.SUITE_RESOLUTION, job.max_failures)
    res = job.resolution(job.a)
    verify_resolution(res, job.max_internal_degree, report)
    if job.field.characteristic:
        report.merge(compare_mod_p(res, report=Report("mod_p", job.max_failures)), "mod_p")
    return report


def comparison_levels(job):
    """ (c, b, a) for the comparison suite; b defaults to a + 1, c is optional. """
    b = job.b if job.b is not None else job.a + 1
    return job.c, b, job.a


@timed("comparison")
def run_comparison(job):
    """ f_{b,a} (and f_{c,b}, f_{c,a} with the composition identity when c is given). """
    report = Report(const.SUITE_COMPARISON, job.max_failures)
    c, b, a = comparison_levels(job)
    sampling = _sampling(job)
    f_ba = comparison_map(job.n, b, a, job.field, job.resolution(b), job.resolution(a))
    report.merge(verify_comparison(f_ba, Report("f", job.max_failures), **sampling), "f{},{}".format(b, a))
    if c is not None:
        f_cb = comparison_map(job.n, c, b, job.field, job.resolution(c), job.resolution(b))
        f_ca = comparison_map(job.n, c, a, job.field, job.resolution(c), job.resolution(a))
        report.merge(verify_comparison(f_cb, Report("f", job.max_failures), **sampling), "f{},{}".format(c, b))
        report.merge(verify_comparison(f_ca, Report("f", job.max_failures), **sampling), "f{},{}".format(c, a))
        verify_composition(f_cb, f_ba, f_ca, report)
    return report


@timed("htt")
def run_htt(job):
    """ Tree counts, termwise vanishing of the transferred higher operations, Stasheff identities of L_a and
    the simplified descent of m_2.
    """
    report = Report(const.SUITE_HTT, job.max_failures)
    for k in range(2, TREE_COUNT_LEAVES + 1):
        report.record("pbt_count", len(enumerate_pbt(k)) == catalan(k - 1), leaves=k)
    for k in range(1, TREE_COUNT_LEAVES):
        report.record("pt_count", len(enumerate_pt(k)) == little_schroeder(k), leaves=k)

    res = job.resolution(job.a)
    sdr = res.perturbed.as_sdr()
    ops = AinfinityStructure.from_dg(res.perturbed.X_inf, res.xa.product, name="X{}".format(job.a))
    labels = res.module.labels()
    basis = res.basis_vector
    vanish = True
    for arity in (3, 4):
        mode, tuples = tools.select_tuples([labels] * arity, job.exhaustive_limit, job.samples, job.seed)
        report.note("pbt{}.mode".format(arity), mode)
        for labs in tuples:
            ok = check_higher_ops_vanish(arity, sdr, ops, [basis(u) for u in labs])
            vanish = vanish and ok
            report.record("pbt{}_terms_vanish".format(arity), ok, inputs=[label_text(u) for u in labs])
    report.note("all PBT3/PBT4 terms vanish", vanish)

    A = AinfinityStructure.from_dg(res.complex, res.product, STASHEFF_ARITY, name="L{}".format(job.a))
    for arity in range(1, STASHEFF_ARITY + 1):
        mode, tuples = tools.select_tuples([labels] * arity, job.exhaustive_limit, job.samples, job.seed)
        report.note("stasheff{}.mode".format(arity), mode)
        for labs in tuples:
            report.record("stasheff{}".format(arity), check_stasheff(A, arity, [basis(u) for u in labs]),
                          inputs=[label_text(u) for u in labs])

    descended = ainfty_descend_simplified(sdr, ops)
    for u in labels:
        for v in labels:
            x, y = basis(u), basis(v)
            report.record("descended_m2", descended.apply(2, [x, y]) == res.product(x, y),
                          left=label_text(u), right=label_text(v))
    return report


SUITE_RUNNERS = {
    const.SUITE_ROWS: run_rows,
    const.SUITE_SDR: run_sdr,
    const.SUITE_DG: run_dg,
    const.SUITE_RESOLUTION: run_resolution,
    const.SUITE_COMPARISON: run_comparison,
    const.SUITE_HTT: run_htt,
}


def run_suite(job, suite=const.SUITE_ALL):
    """ Run one named suite, or all of them merged under their names. """
    if suite != const.SUITE_ALL:
        return SUITE_RUNNERS[suite](job)
    report = Report(const.SUITE_ALL, job.max_failures)
    for name in const.SUITES:
        report.merge(SUITE_RUNNERS[name](job), name)
    return report
