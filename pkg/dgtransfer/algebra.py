# -*- coding:utf-8 -*-

"""
Algebra core: exact scalar fields, sparse polynomials in x_1..x_n, exterior monomials and the
bigraded elements of Lambda (x) S together with their product.

Scalars are elements of a sympy domain (QQ, or GF(p) with non-symmetric residues); polynomials are
sympy `PolyElement`s of a lex-ordered `PolyRing`. Everything built here is treated as immutable.

Author: dgtransfer developers
Date:   2024/03/02
"""

import re
import functools
import itertools
from collections import namedtuple

from sympy import isprime
from sympy.polys.domains import QQ, GF
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from dgtransfer.error import DivisorVanishes, InadmissibleCharacteristic, ParseError, ShapeError

__all__ = ("FieldSpec", "accumulate", "PolynomialRing", "polynomial_ring", "BiBasisVector", "Vector", "BiElement",
           "monomials_of_degree", "ext_monomials", "wedge", "bi_product", "in_maximal_ideal_power",
           "permute", "parse_element", "poly_text", "vector_text")


class FieldSpec:
    """ The coefficient field k: QQ for characteristic 0, GF(p) otherwise.

    Attributes:
        characteristic: 0 or a prime p.
        domain: The sympy domain holding the scalars.
    """

    def __init__(self, characteristic=0):
        if characteristic < 0 or (characteristic != 0 and not isprime(characteristic)):
            raise InadmissibleCharacteristic("characteristic must be 0 or a prime, got {}".format(characteristic))
        self.characteristic = characteristic
        if characteristic == 0:
            self.domain = QQ
        else:
            self.domain = GF(characteristic, symmetric=False)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("FieldSpec", self.characteristic))

    def __repr__(self):
        return "FieldSpec({})".format(self.characteristic)

    def __call__(self, value):
        """ Convert an int, a QQ element, a "p/q" string or a domain element into the field. """
        if isinstance(value, str):
            m = _RATIONAL.match(value)
            if not m or (m.group(2) is not None and int(m.group(2)) == 0):
                raise ParseError("not a rational number: {!r}".format(value))
            value = QQ(int(m.group(1)), int(m.group(2) or 1))
        if QQ.of_type(value):
            return self.divide(self.domain(int(QQ.numer(value))), self.domain(int(QQ.denom(value))))
        return self.domain.convert(value)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def divide(self, a, b):
        """ Exact a / b; dividing by a residue that vanishes in k raises DivisorVanishes. """
        if self.domain.is_zero(b):
            raise DivisorVanishes("division by zero in characteristic {}".format(self.characteristic))
        return self.domain.quo(a, b)

    def reciprocal(self, m):
        """ 1/m for an integer m. """
        return self.divide(self.domain.one, self.domain(m))

    def admits(self, m):
        """ True iff the integer m is invertible in k. """
        if self.characteristic == 0:
            return m != 0
        return m % self.characteristic != 0

    def require_admissible(self, bound, what=""):
        """ Characteristic 0, or p >= bound. """
        if self.characteristic and self.characteristic < bound:
            raise InadmissibleCharacteristic(
                "characteristic {} too small{}: need p >= {}".format(
                    self.characteristic, " for " + what if what else "", bound))

    def to_rational(self, c):
        """ c as a QQ element; residues of GF(p) map to their representative in [0, p). """
        if self.characteristic == 0:
            return c
        return QQ(int(self.domain.to_int(c)))

    def to_str(self, c):
        """ "p/q" for non-integral rationals, "p" otherwise. """
        return rational_text(self.to_rational(c))


def rational_text(q):
    numer, denom = int(QQ.numer(q)), int(QQ.denom(q))
    if denom == 1:
        return str(numer)
    return "{}/{}".format(numer, denom)


class PolynomialRing:
    """ R = k[x_1, ..., x_n] with lexicographic term order.

    Attributes:
        n: Number of variables.
        field: FieldSpec of the coefficients.
        poly_ring: The underlying sympy PolyRing.
    """

    def __init__(self, n, field):
        if n < 1:
            raise ShapeError("need at least one variable, got n={}".format(n))
        self.n = n
        self.field = field
        self.names = tuple("x%d" % (k + 1) for k in range(n))
        self.poly_ring = PolyRing(",".join(self.names), field.domain, lex)
        self.zero_monomial = (0,) * n

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.n == self.n and other.field == self.field

    def __hash__(self):
        return hash(("PolynomialRing", self.n, self.field.characteristic))

    def __repr__(self):
        return "PolynomialRing(n={}, char={})".format(self.n, self.field.characteristic)

    @property
    def zero(self):
        return self.poly_ring.zero

    @property
    def one(self):
        return self.poly_ring.one

    def const(self, c):
        return self.poly_ring.ground_new(self.field(c))

    def gen(self, k):
        """ x_k, 1-based. """
        return self.poly_ring.gens[k - 1]

    def monomial(self, exponents, coeff=1):
        if len(exponents) != self.n:
            raise ShapeError("monomial {} has wrong length for n={}".format(exponents, self.n))
        return self.poly_ring.term_new(tuple(exponents), self.field(coeff))

    def from_terms(self, terms):
        """ Polynomial from a {exponents: scalar} mapping. """
        return self.poly_ring.from_dict(dict(terms))

    def scale(self, f, c):
        """ c*f for a scalar c of the field. """
        return f.mul_ground(c)

    def degrees(self, f):
        return set(sum(m) for m in f.keys())

    def is_homogeneous(self, f):
        return len(self.degrees(f)) <= 1

    def degree(self, f):
        """ Degree of a nonzero homogeneous polynomial, None for zero. """
        degs = self.degrees(f)
        if not degs:
            return None
        if len(degs) > 1:
            raise ShapeError("polynomial {} is not homogeneous".format(poly_text(self, f)))
        return degs.pop()

    def constant_value(self, f):
        """ Constant coefficient of f. """
        return f.get(self.zero_monomial, self.field.zero)

    def is_constant(self, f):
        return all(m == self.zero_monomial for m in f.keys())

    def permute(self, f, perm):
        return self.poly_ring.from_dict({permute_monomial(m, perm): c for m, c in f.items()})

    def evaluate_y(self, exponents):
        """ The image x^mu of y^mu under y_i -> x_i. """
        return self.monomial(exponents)


@functools.lru_cache(maxsize=None)
def polynomial_ring(n, characteristic=0):
    """ Shared ring instance for (n, characteristic). """
    return PolynomialRing(n, FieldSpec(characteristic))


def monomials_of_degree(n, d):
    """ Exponent vectors of total degree d in n variables, lexicographically descending. """
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        exps = [0] * n
        for k in combo:
            exps[k] += 1
        out.append(tuple(exps))
    return out


def ext_monomials(n, i):
    """ Strictly increasing index lists T of size i in 1..n, lexicographic. """
    return [tuple(t) for t in itertools.combinations(range(1, n + 1), i)]


def wedge(T, U):
    """ e_T ^ e_U = sign * e_{T u U}.

    Returns:
        (sign, merged): sign is +1/-1, or (0, None) when T and U share an index.
    """
    if set(T) & set(U):
        return 0, None
    inversions = sum(1 for t in T for u in U if t > u)
    sign = -1 if inversions % 2 else 1
    return sign, tuple(sorted(T + U))


def sort_sign(indices):
    """ (sign, sorted) for an arbitrary index list; sign 0 on repeats. """
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = sum(1 for x, y in itertools.combinations(indices, 2) if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def permute_monomial(exponents, perm):
    """ x_k -> x_{perm[k-1]} on an exponent vector. """
    out = [0] * len(exponents)
    for k, e in enumerate(exponents):
        out[perm[k] - 1] += e
    return tuple(out)


class BiBasisVector(namedtuple("BiBasisVector", ["ext", "sym"])):
    """ Standard basis vector e_T (x) y^mu of Lambda^{|T|} (x) S_{|mu|}. """

    __slots__ = ()

    @property
    def lambda_degree(self):
        return len(self.ext)

    @property
    def column(self):
        return sum(self.sym)

    @property
    def internal_degree(self):
        return len(self.ext) + sum(self.sym)

    def sort_key(self):
        return (len(self.ext), sum(self.sym), self.ext, tuple(-e for e in self.sym))

    @property
    def text(self):
        return "e[{}]*y^[{}]".format(",".join(str(t) for t in self.ext), ",".join(str(e) for e in self.sym))

    def __str__(self):
        return self.text


def label_sort_key(label):
    """ Deterministic order over mixed labels: the unit, then BiBasisVectors, then named labels. """
    if isinstance(label, BiBasisVector):
        return (1, label.sort_key(), "")
    if label == "1":
        return (0, (), "")
    match = re.match(r"^([a-z]+)(\d+)$", str(label))
    if match:
        return (2, (int(match.group(2)),), match.group(1))
    return (3, (), str(label))


def label_text(label):
    return label.text if isinstance(label, BiBasisVector) else str(label)


def accumulate(terms, label, f):
    if not f:
        return
    g = terms.get(label)
    g = f if g is None else g + f
    if g:
        terms[label] = g
    else:
        terms.pop(label, None)


class Vector:
    """ A finite R-linear combination of basis labels of a free module.

    Attributes:
        ring: PolynomialRing of the coefficients.
        terms: {label: nonzero polynomial}.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, ring, label, coeff=None):
        return cls(ring, {label: ring.one if coeff is None else coeff})

    @classmethod
    def combine(cls, ring, pairs):
        """ Sum of f * v over (f, v) pairs, f a polynomial and v a Vector. """
        terms = {}
        for f, v in pairs:
            if not f:
                continue
            for label, g in v.terms.items():
                accumulate(terms, label, f * g)
        return cls(ring, terms)

    def _new(self, terms):
        return self.__class__(self.ring, terms)

    def items(self):
        return self.terms.items()

    def labels(self):
        return self.terms.keys()

    def coefficient(self, label):
        return self.terms.get(label, self.ring.zero)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for label, f in other.terms.items():
            accumulate(terms, label, f)
        return self._new(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for label, f in other.terms.items():
            accumulate(terms, label, -f)
        return self._new(terms)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def scale(self, f):
        """ f * self, f a polynomial. """
        if not f:
            return self._new({})
        return self._new({k: f * v for k, v in self.terms.items()})

    def scale_scalar(self, c):
        return self._new({k: v.mul_ground(c) for k, v in self.terms.items()})

    def restrict(self, predicate):
        return self._new({k: v for k, v in self.terms.items() if predicate(k)})

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def internal_degrees(self, degree_of_label):
        """ Set of internal degrees deg(coefficient) + deg(label) over all terms. """
        return set(sum(m) + degree_of_label(label) for label, f in self.terms.items() for m in f.keys())

    def text(self):
        return vector_text(self)

    def __repr__(self):
        return "<{} {}>".format(self.__class__.__name__, self.text())


class BiElement(Vector):
    """ An element of (a direct sum of) components Lambda^i (x) S_j, keyed by BiBasisVector. """

    __slots__ = ()

    def homological_degrees(self):
        return set(v.lambda_degree for v in self.terms)

    def homological_degree(self):
        """ The Lambda-degree of a nonzero element concentrated in one degree, else None. """
        degs = self.homological_degrees()
        return degs.pop() if len(degs) == 1 else None

    def columns(self):
        return set(v.column for v in self.terms)

    def component(self, i=None, j=None):
        return self.restrict(lambda v: (i is None or v.lambda_degree == i) and (j is None or v.column == j))

    def truncate(self, a):
        """ Delete the components with column index j >= a. """
        return self.restrict(lambda v: v.column < a)

    def internal_degree(self):
        degs = self.internal_degrees(lambda v: v.internal_degree)
        if len(degs) > 1:
            return None
        return degs.pop() if degs else None

    def map_basis(self, image):
        """ R-linear extension of `image`: BiBasisVector -> BiElement. """
        return BiElement.combine(self.ring, [(f, image(v)) for v, f in self.terms.items()])

    @classmethod
    def unit(cls, ring):
        return cls.basis(ring, BiBasisVector((), (0,) * ring.n))


def bi_product(alpha, beta):
    """ (c e_T (x) mu)(c' e_U (x) nu) = cc' sign(T,U) e_{T u U} (x) mu nu, extended bilinearly. """
    if alpha.ring != beta.ring:
        raise ShapeError("factors live over different rings: {} vs {}".format(alpha.ring, beta.ring))
    terms = {}
    for u, f in alpha.terms.items():
        for v, g in beta.terms.items():
            sign, ext = wedge(u.ext, v.ext)
            if not sign:
                continue
            sym = tuple(p + q for p, q in zip(u.sym, v.sym))
            fg = f * g
            accumulate(terms, BiBasisVector(ext, sym), fg if sign > 0 else -fg)
    return BiElement(alpha.ring, terms)


def in_maximal_ideal_power(f, t):
    """ True iff every monomial of f has total degree >= t. """
    return all(sum(m) >= t for m in f.keys())


def permute(alpha, perm):
    """ Act by a permutation of 1..n on x, y and e simultaneously.

    Args:
        alpha: BiElement.
        perm: tuple, perm[k-1] is the image of k.
    """
    ring = alpha.ring
    terms = {}
    for v, f in alpha.terms.items():
        sign, ext = sort_sign([perm[t - 1] for t in v.ext])
        g = ring.permute(f, perm)
        accumulate(terms, BiBasisVector(ext, permute_monomial(v.sym, perm)), g if sign > 0 else -g)
    return BiElement(ring, terms)


# ---------------------------------------------------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------------------------------------------------

def _monomial_text(ring, m):
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("{}^{}".format(name, e))
    return "*".join(parts)


def _signed_terms(ring, f):
    """ [(negative, body)] of f in lex order, body without sign. """
    out = []
    for m, c in f.terms():
        q = ring.field.to_rational(c)
        negative = q < 0
        q = abs(q)
        coeff = rational_text(q)
        mono = _monomial_text(ring, m)
        if not mono:
            body = coeff
        elif q == 1:
            body = mono
        else:
            body = "{}*{}".format(coeff, mono)
        out.append((negative, body))
    return out


def _join(signed):
    text = ""
    for k, (negative, body) in enumerate(signed):
        if k == 0:
            text = ("-" if negative else "") + body
        else:
            text += (" - " if negative else " + ") + body
    return text or "0"


def poly_text(ring, f):
    """ `x1^2 - 1/2*x1*x2` style text; "0" for zero. """
    return _join(_signed_terms(ring, f))


def vector_text(vector, order=None):
    """ Text of an element, e.g. `-x2*b1 - x1*b2`; labels in `order` (default: label_sort_key). """
    ring = vector.ring
    labels = order if order is not None else sorted(vector.terms, key=label_sort_key)
    signed = []
    for label in labels:
        f = vector.terms.get(label)
        if not f:
            continue
        name = label_text(label)
        pieces = _signed_terms(ring, f)
        if len(pieces) == 1:
            negative, body = pieces[0]
            if name == "1":
                signed.append((negative, body))
            elif body == "1":
                signed.append((negative, name))
            else:
                signed.append((negative, "{}*{}".format(body, name)))
        else:
            signed.append((False, "({})*{}".format(_join(pieces), name) if name != "1" else "({})".format(
                _join(pieces))))
    return _join(signed)


_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")
_NUMBER = re.compile(r"^(\d+)(?:/(\d+))?$")
_XPOWER = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_EXT = re.compile(r"^e\[((?:\d+(?:,\d+)*)?)\]$")
_SYM = re.compile(r"^y\^\[(\d+(?:,\d+)*)\]$")
_LABEL = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def _split_terms(text):
    text = re.sub(r"\s+", "", text)
    if not text:
        raise ParseError("empty element")
    pieces = []
    token = ""
    sign = 1
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ']' in {!r}".format(text))
        if ch in "+-" and depth == 0:
            if token:
                pieces.append((sign, token))
                token = ""
                sign = 1
            if ch == "-":
                sign = -sign
            continue
        token += ch
    if depth != 0:
        raise ParseError("unbalanced '[' in {!r}".format(text))
    if not token:
        raise ParseError("dangling sign in {!r}".format(text))
    pieces.append((sign, token))
    return pieces


def parse_element(text, ring, resolve_label=None):
    """ Parse `coef*e[i,j,...]*y^[exponents]` terms joined by +/-.

    Coefficients are products of rationals and powers x_k^e; `e[...]` or `y^[...]` may be omitted
    (a term with neither is a multiple of the unit label "1"). Other bare words are handed to
    `resolve_label`, which must return a basis label or raise ParseError.

    Returns:
        Vector whose labels are BiBasisVectors, "1", or resolved labels.
    """
    n = ring.n
    terms = {}
    for sign, token in _split_terms(text):
        coeff = ring.const(sign)
        ext = None
        sym = None
        named = None
        for factor in token.split("*"):
            if not factor:
                raise ParseError("empty factor in {!r}".format(token))
            m = _NUMBER.match(factor)
            if m:
                if m.group(2) is not None and int(m.group(2)) == 0:
                    raise ParseError("zero denominator in {!r}".format(factor))
                coeff = coeff.mul_ground(ring.field(QQ(int(m.group(1)), int(m.group(2) or 1))))
                continue
            m = _XPOWER.match(factor)
            if m:
                k = int(m.group(1))
                if not 1 <= k <= n:
                    raise ParseError("variable x{} out of range for n={}".format(k, n))
                exps = [0] * n
                exps[k - 1] = int(m.group(2) or 1)
                coeff = coeff * ring.monomial(exps)
                continue
            m = _EXT.match(factor)
            if m:
                if ext is not None:
                    raise ParseError("two e[...] factors in {!r}".format(token))
                ext = [int(t) for t in m.group(1).split(",")] if m.group(1) else []
                if any(not 1 <= t <= n for t in ext):
                    raise ParseError("wedge index out of range in {!r}".format(factor))
                continue
            m = _SYM.match(factor)
            if m:
                if sym is not None:
                    raise ParseError("two y^[...] factors in {!r}".format(token))
                sym = tuple(int(e) for e in m.group(1).split(","))
                if len(sym) != n:
                    raise ParseError("y exponent vector {!r} needs {} entries".format(factor, n))
                continue
            if _LABEL.match(factor) and resolve_label is not None and named is None:
                named = resolve_label(factor)
                continue
            raise ParseError("cannot parse factor {!r}".format(factor))
        if named is not None:
            if ext is not None or sym is not None:
                raise ParseError("label {!r} cannot be combined with e/y factors".format(token))
            accumulate(terms, named, coeff)
        elif ext is None and sym is None:
            accumulate(terms, "1", coeff)
        else:
            sign_e, ordered = sort_sign(ext or [])
            if not sign_e:
                continue
            label = BiBasisVector(ordered, sym if sym is not None else (0,) * n)
            accumulate(terms, label, coeff if sign_e > 0 else -coeff)
    return Vector(ring, terms)
