# -*- coding:utf-8 -*-

"""
Homological core: based free modules, internal-degree preserving maps, graded maps, chain complexes,
deformation retract data and its verification, graded strands over the base field, and the
retract of a split exact row onto its truncation.

Internal degree convention: an entry f at (target t, source s) of a ModuleMap is homogeneous with
deg f + deg t = deg s.

Author: dgtransfer developers
Date:   2024/03/05
"""

from dgtransfer import const
from dgtransfer import linalg
from dgtransfer.algebra import Vector, accumulate, label_text, monomials_of_degree, poly_text
from dgtransfer.error import ShapeError, VerificationError
from dgtransfer.report import Report
from dgtransfer.utils import logger


class BasedModule:
    """ A free R-module with an ordered basis of labels, each with an internal degree.

    Attributes:
        labels: tuple of hashable labels.
        degrees: {label: internal degree}.
        ring: PolynomialRing.
        element_class: Vector subclass used for elements.
    """

    def __init__(self, labels, degrees, ring, element_class=Vector):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ShapeError("duplicate basis labels")
        if callable(degrees):
            degrees = {label: degrees(label) for label in self.labels}
        self.degrees = {label: degrees[label] for label in self.labels}
        self.ring = ring
        self.element_class = element_class
        self.index = {label: k for k, label in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.index

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, BasedModule) and self.labels == other.labels and \
            self.degrees == other.degrees and self.ring == other.ring

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "<BasedModule rank={}>".format(len(self.labels))

    def degree(self, label):
        return self.degrees[label]

    def element(self, terms=None):
        return self.element_class(self.ring, terms)

    def basis_vector(self, label):
        return self.element_class.basis(self.ring, label)


class ModuleMap:
    """ R-linear map between based modules, stored by columns: {source label: {target label: poly}}. """

    def __init__(self, source, target, columns=None, check=True):
        self.source = source
        self.target = target
        cols = {}
        for s, col in (columns or {}).items():
            col = {t: f for t, f in col.items() if f}
            if col:
                cols[s] = col
        self.columns = cols
        if check:
            self.check()

    def check(self):
        """ Raise ShapeError on unknown labels or on an entry that breaks internal degree. """
        for s, col in self.columns.items():
            if s not in self.source:
                raise ShapeError("unknown source label {}".format(label_text(s)))
            ds = self.source.degree(s)
            for t, f in col.items():
                if t not in self.target:
                    raise ShapeError("unknown target label {}".format(label_text(t)))
                dt = self.target.degree(t)
                for m in f.keys():
                    if sum(m) + dt != ds:
                        raise ShapeError("entry ({}, {}) = {} does not preserve internal degree".format(
                            label_text(t), label_text(s), poly_text(self.source.ring, f)))

    @classmethod
    def from_function(cls, source, target, image, check=True):
        """ Build from `image(label) -> element of target`. """
        columns = {}
        for s in source.labels:
            v = image(s)
            if v:
                columns[s] = dict(v.terms)
        return cls(source, target, columns, check)

    @classmethod
    def identity(cls, module):
        one = module.ring.one
        return cls(module, module, {label: {label: one} for label in module.labels}, check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {}, check=False)

    def entry(self, t, s):
        return self.columns.get(s, {}).get(t, self.source.ring.zero)

    def apply(self, v):
        terms = {}
        for s, f in v.terms.items():
            if s not in self.source:
                raise ShapeError("{} is not a basis label of the source".format(label_text(s)))
            for t, g in self.columns.get(s, {}).items():
                accumulate(terms, t, f * g)
        return self.target.element(terms)

    def compose(self, g):
        """ self o g. """
        if not (g.target is self.source or g.target == self.source):
            raise ShapeError("cannot compose: target of the inner map is not the source of the outer map")
        columns = {}
        for s, col in g.columns.items():
            terms = {}
            for m, f in col.items():
                for t, h in self.columns.get(m, {}).items():
                    accumulate(terms, t, f * h)
            if terms:
                columns[s] = terms
        return ModuleMap(g.source, self.target, columns, check=False)

    def _same_shape(self, other):
        if not ((other.source is self.source or other.source == self.source) and
                (other.target is self.target or other.target == self.target)):
            raise ShapeError("maps have different sources or targets")

    def __add__(self, other):
        self._same_shape(other)
        columns = {s: dict(col) for s, col in self.columns.items()}
        for s, col in other.columns.items():
            mine = columns.setdefault(s, {})
            for t, f in col.items():
                accumulate(mine, t, f)
        return ModuleMap(self.source, self.target, columns, check=False)

    def __neg__(self):
        return ModuleMap(self.source, self.target,
                         {s: {t: -f for t, f in col.items()} for s, col in self.columns.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """ c * self, c a field scalar. """
        return ModuleMap(self.source, self.target,
                         {s: {t: f.mul_ground(c) for t, f in col.items()} for s, col in self.columns.items()},
                         check=False)

    def is_zero(self):
        return not self.columns

    def __eq__(self, other):
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.columns == other.columns

    __hash__ = None

    def entries(self):
        """ (target, source, poly) in basis order of the target, then the source. """
        out = []
        for s, col in self.columns.items():
            for t, f in col.items():
                out.append((self.target.index[t], self.source.index[s], t, s, f))
        out.sort(key=lambda x: (x[0], x[1]))
        return [(t, s, f) for _, _, t, s, f in out]

    def differences(self, other):
        """ Entries where self and other differ: [(target, source, self - other)]. """
        return (self - other).entries()

    def to_triples(self):
        ring = self.source.ring
        return [[label_text(t), label_text(s), poly_text(ring, f)] for t, s, f in self.entries()]

    def reduce(self, source, target):
        """ The same matrix over the (modular) ring of `source`, for comparing a rational map mod p. """
        ring = source.ring
        field = ring.field
        columns = {}
        for s, col in self.columns.items():
            columns[s] = {t: ring.from_terms({m: field(self.source.ring.field.to_rational(c))
                                              for m, c in f.items()}) for t, f in col.items()}
        return ModuleMap(source, target, columns, check=False)


class GradedModule:
    """ A family of based modules indexed by homological degree; labels unique across degrees. """

    def __init__(self, components, ring, element_class=Vector):
        self.ring = ring
        self.element_class = element_class
        self.components = {d: m for d, m in sorted(components.items()) if len(m)}
        self._degree_of = {}
        for d, m in self.components.items():
            for label in m.labels:
                if label in self._degree_of:
                    raise ShapeError("label {} occurs in two degrees".format(label_text(label)))
                self._degree_of[label] = d
        self._empty = BasedModule((), {}, ring, element_class)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, GradedModule) and self.components == other.components

    def __hash__(self):
        return hash(tuple(self.components))

    def __contains__(self, label):
        return label in self._degree_of

    def __repr__(self):
        return "<GradedModule ranks={}>".format(self.ranks())

    def degrees(self):
        return list(self.components)

    def component(self, d):
        return self.components.get(d, self._empty)

    def degree_of(self, label):
        """ Homological degree of a basis label. """
        try:
            return self._degree_of[label]
        except KeyError:
            raise ShapeError("{} is not a basis label".format(label_text(label)))

    def internal_degree(self, label):
        return self.component(self.degree_of(label)).degree(label)

    def labels(self):
        return [label for m in self.components.values() for label in m.labels]

    def rank(self):
        return len(self._degree_of)

    def ranks(self):
        """ [rank in degree d for d = 0..max degree]. """
        if not self.components:
            return []
        return [len(self.component(d)) for d in range(0, max(self.components) + 1)]

    def element(self, terms=None):
        return self.element_class(self.ring, terms)

    def basis_vector(self, label):
        if label not in self:
            raise ShapeError("{} is not a basis label".format(label_text(label)))
        return self.element_class.basis(self.ring, label)

    def homological_degree(self, v):
        """ Degree of a nonzero element concentrated in one degree, else None. """
        degs = set(self.degree_of(label) for label in v.terms)
        return degs.pop() if len(degs) == 1 else None

    def split(self, v):
        parts = {}
        for label, f in v.terms.items():
            parts.setdefault(self.degree_of(label), {})[label] = f
        return {d: self.element(terms) for d, terms in parts.items()}

    def truncate(self, lo=None, hi=None):
        return GradedModule({d: m for d, m in self.components.items()
                             if (lo is None or d >= lo) and (hi is None or d <= hi)}, self.ring, self.element_class)


class GradedMap:
    """ Degreewise family of ModuleMaps source_d -> target_{d + shift}. """

    def __init__(self, source, target, shift, blocks=None):
        self.source = source
        self.target = target
        self.shift = shift
        self.blocks = {}
        for d, block in sorted((blocks or {}).items()):
            if block.is_zero():
                continue
            if block.source != source.component(d) or block.target != target.component(d + shift):
                raise ShapeError("block in degree {} does not match the graded modules".format(d))
            self.blocks[d] = block

    @classmethod
    def from_function(cls, source, target, shift, image, check=True):
        blocks = {}
        for d in source.degrees():
            blocks[d] = ModuleMap.from_function(source.component(d), target.component(d + shift), image, check)
        return cls(source, target, shift, blocks)

    @classmethod
    def identity(cls, module):
        return cls(module, module, 0, {d: ModuleMap.identity(module.component(d)) for d in module.degrees()})

    @classmethod
    def zero(cls, source, target, shift):
        return cls(source, target, shift, {})

    @classmethod
    def assemble(cls, source, target, shift, parts):
        """ Merge maps defined on parts of `source` (labels taken over unchanged) into one map. """
        columns = {}
        for part in parts:
            if part.shift != shift:
                raise ShapeError("cannot assemble maps of different shifts")
            for d, block in part.blocks.items():
                cols = columns.setdefault(d, {})
                for s, col in block.columns.items():
                    mine = cols.setdefault(s, {})
                    for t, f in col.items():
                        accumulate(mine, t, f)
        blocks = {}
        for d, cols in columns.items():
            blocks[d] = ModuleMap(source.component(d), target.component(d + shift), cols)
        return cls(source, target, shift, blocks)

    def block(self, d):
        block = self.blocks.get(d)
        if block is None:
            return ModuleMap.zero(self.source.component(d), self.target.component(d + self.shift))
        return block

    def apply(self, v):
        terms = {}
        for s, f in v.terms.items():
            block = self.blocks.get(self.source.degree_of(s))
            if block is None:
                continue
            for t, g in block.columns.get(s, {}).items():
                accumulate(terms, t, f * g)
        return self.target.element(terms)

    def __call__(self, v):
        return self.apply(v)

    def compose(self, g):
        """ self o g. """
        if not (g.target is self.source or g.target == self.source):
            raise ShapeError("cannot compose graded maps: modules do not match")
        blocks = {}
        for d, gb in g.blocks.items():
            fb = self.blocks.get(d + g.shift)
            if fb is not None:
                blocks[d] = fb.compose(gb)
        return GradedMap(g.source, self.target, self.shift + g.shift, blocks)

    def power(self, k):
        if self.shift != 0 or not (self.source is self.target or self.source == self.target):
            raise ShapeError("only endomorphisms of degree 0 have powers")
        result = GradedMap.identity(self.source)
        for _ in range(k):
            result = self.compose(result)
        return result

    def _same_shape(self, other):
        if self.shift != other.shift or not (self.source is other.source or self.source == other.source) or \
                not (self.target is other.target or self.target == other.target):
            raise ShapeError("graded maps have different shapes")

    def __add__(self, other):
        self._same_shape(other)
        blocks = dict(self.blocks)
        for d, block in other.blocks.items():
            blocks[d] = blocks[d] + block if d in blocks else block
        return GradedMap(self.source, self.target, self.shift, blocks)

    def __neg__(self):
        return GradedMap(self.source, self.target, self.shift, {d: -b for d, b in self.blocks.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedMap(self.source, self.target, self.shift, {d: b.scale(c) for d, b in self.blocks.items()})

    def is_zero(self):
        return not self.blocks

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.shift == other.shift and self.source == other.source and self.target == other.target \
            and self.blocks == other.blocks

    __hash__ = None

    def restrict(self, lo=None, hi=None):
        """ Keep the blocks whose source degree lies in [lo, hi]. """
        return GradedMap(self.source, self.target, self.shift,
                         {d: b for d, b in self.blocks.items()
                          if (lo is None or d >= lo) and (hi is None or d <= hi)})

    def differences(self, other=None):
        """ Located differences [(degree, target, source, poly)] between self and other (default zero). """
        diff = self if other is None else self - other
        out = []
        for d, block in diff.blocks.items():
            for t, s, f in block.entries():
                out.append((d, t, s, f))
        return out

    def entries(self):
        return self.differences()

    def entry_count(self):
        return sum(len(self.source.component(d)) for d in self.source.degrees())

    def to_dict(self):
        """ Matrix export: {degree: [[row label, column label, polynomial], ...]}. """
        return {str(d): block.to_triples() for d, block in self.blocks.items()}

    def reduce(self, source, target):
        return GradedMap(source, target, self.shift,
                         {d: b.reduce(source.component(d), target.component(d + self.shift))
                          for d, b in self.blocks.items()})


def located(ring, differences, **extra):
    """ Report entries for GradedMap.differences output. """
    out = []
    for d, t, s, f in differences:
        where = {"degree": d, "row": label_text(t), "column": label_text(s), "value": poly_text(ring, f)}
        where.update(extra)
        out.append(where)
    return out


class ChainComplex:
    """ A graded module with a differential of shift -1. """

    def __init__(self, module, differential=None, name=""):
        self.module = module
        self.name = name
        if differential is None:
            differential = GradedMap.zero(module, module, -1)
        if differential.shift != -1:
            raise ShapeError("a differential has shift -1, got {}".format(differential.shift))
        self.differential = differential

    @property
    def ring(self):
        return self.module.ring

    def __repr__(self):
        return "<ChainComplex {} ranks={}>".format(self.name, self.module.ranks())

    def degrees(self):
        return self.module.degrees()

    def component(self, d):
        return self.module.component(d)

    def degree_of(self, label):
        return self.module.degree_of(label)

    def d(self, v):
        return self.differential.apply(v)

    def with_differential(self, differential, name=None):
        return ChainComplex(self.module, differential, self.name if name is None else name)

    def truncate(self, lo=None, hi=None):
        """ The subquotient complex on degrees in [lo, hi]; differentials leaving the range are dropped. """
        module = self.module.truncate(lo, hi)
        blocks = {}
        for d, block in self.differential.blocks.items():
            if d in module.components and d - 1 in module.components:
                blocks[d] = ModuleMap(module.component(d), module.component(d - 1), block.columns, check=False)
        return ChainComplex(module, GradedMap(module, module, -1, blocks), self.name)

    def verify_square_zero(self, report=None, check="square_zero"):
        report = report or Report(self.name or "complex")
        dd = self.differential.compose(self.differential)
        report.record_many(check, self.module.rank(), located(self.ring, dd.differences()))
        return report

    def strand(self, t):
        return Strand(self, t)

    def strand_homology_dims(self, t):
        return self.strand(t).homology_dims()

    def minimality_failures(self):
        """ Differential entries with a nonzero constant term. """
        out = []
        for d, t, s, f in self.differential.entries():
            if self.ring.constant_value(f):
                out.append((d, t, s, f))
        return out


class Strand:
    """ The internal-degree-t strand of a complex: a complex of finite dimensional k-vector spaces.

    Attributes:
        t: Internal degree.
        bases: {degree: [(label, x-exponents)]}.
        matrices: {degree: rows of the matrix of the differential out of that degree}.
    """

    def __init__(self, complex, t):
        if t < 0:
            raise ShapeError("strand degree must be non-negative, got {}".format(t))
        self.complex = complex
        self.t = t
        ring = complex.ring
        self.K = ring.field.domain
        self.bases = {}
        self.index = {}
        for d in complex.degrees():
            comp = complex.component(d)
            basis = []
            for label in comp.labels:
                e = comp.degree(label)
                if e <= t:
                    basis.extend((label, m) for m in monomials_of_degree(ring.n, t - e))
            self.bases[d] = basis
            self.index[d] = {pair: k for k, pair in enumerate(basis)}
        self.matrices = {}
        for d in complex.degrees():
            self.matrices[d] = self._matrix(d)

    def _matrix(self, d):
        K = self.K
        source = self.bases.get(d, [])
        target = self.bases.get(d - 1, [])
        rows = [[K.zero] * len(source) for _ in target]
        block = self.complex.differential.blocks.get(d)
        if block is None or not target:
            return rows
        index = self.index[d - 1]
        for j, (label, m) in enumerate(source):
            for tgt, f in block.columns.get(label, {}).items():
                for mf, c in f.items():
                    mono = tuple(p + q for p, q in zip(m, mf))
                    r = index[(tgt, mono)]
                    rows[r][j] = rows[r][j] + c
        return rows

    def dims(self):
        return {d: len(basis) for d, basis in self.bases.items()}

    def rank_of(self, d):
        return linalg.rank(self.matrices.get(d, []), len(self.bases.get(d, [])), self.K)

    def homology_dims(self):
        """ [dim H_d for d = 0..max degree]. """
        degrees = self.complex.degrees()
        if not degrees:
            return []
        ranks = {d: self.rank_of(d) for d in degrees}
        out = []
        for d in range(0, max(degrees) + 1):
            dim = len(self.bases.get(d, []))
            out.append(dim - ranks.get(d, 0) - ranks.get(d + 1, 0))
        return out

    def square_zero(self):
        K = self.K
        for d in self.complex.degrees():
            A = self.matrices.get(d - 1)
            B = self.matrices.get(d)
            if not A or not B or not B[0]:
                continue
            product = linalg.matmul(A, B, len(B[0]), K)
            if any(c for row in product for c in row):
                return False
        return True


def strand(C, t):
    return C.strand(t)


def strand_homology_dims(C, t):
    return C.strand_homology_dims(t)


class SdrData:
    """ Deformation retract data (X, Y, i, p, h): i: Y -> X, p: X -> Y, h: X -> X of shift +1.

    Attributes:
        special: True when hi = 0, ph = 0 and h^2 = 0 are claimed.
        stalk: [(label, element of X, free label)] describing the basis of Y inside a bigger module.
    """

    def __init__(self, X, Y, i, p, h, special=False, name=""):
        if i.shift != 0 or p.shift != 0 or h.shift != 1:
            raise ShapeError("i, p must have shift 0 and h shift +1")
        if i.source != Y.module or i.target != X.module:
            raise ShapeError("i must map Y to X")
        if p.source != X.module or p.target != Y.module:
            raise ShapeError("p must map X to Y")
        if h.source != X.module or h.target != X.module:
            raise ShapeError("h must map X to X")
        self.X = X
        self.Y = Y
        self.i = i
        self.p = p
        self.h = h
        self.special = special
        self.name = name
        self.stalk = []

    def as_sdr(self):
        return self

    def __repr__(self):
        return "<SdrData {} X={} Y={} special={}>".format(self.name, self.X.module.ranks(), self.Y.module.ranks(),
                                                         self.special)

    @classmethod
    def identity(cls, C):
        one = GradedMap.identity(C.module)
        return cls(C, C, one, one, GradedMap.zero(C.module, C.module, 1), special=True, name="identity")


def verify_sdr(sdr, special=None, report=None, max_failures=const.DEFAULT_MAX_FAILURES):
    """ Check pi = 1, ip - 1 = dh + hd, that i and p are chain maps and, if special, hi = ph = h^2 = 0.

    Returns:
        Report, one check per identity, failures located by (degree, row, column, value).
    """
    special = sdr.special if special is None else special
    report = report or Report(sdr.name or "sdr", max_failures)
    X, Y, i, p, h = sdr.X, sdr.Y, sdr.i, sdr.p, sdr.h
    ring = X.ring
    dX, dY = X.differential, Y.differential
    one_x = GradedMap.identity(X.module)
    one_y = GradedMap.identity(Y.module)
    ny, nx = Y.module.rank(), X.module.rank()

    report.record_many("pi=1", ny, located(ring, p.compose(i).differences(one_y)))
    homotopy = i.compose(p) - one_x - (dX.compose(h) + h.compose(dX))
    report.record_many("ip-1=dh+hd", nx, located(ring, homotopy.differences()))
    report.record_many("i_chain_map", ny, located(ring, dX.compose(i).differences(i.compose(dY))))
    report.record_many("p_chain_map", nx, located(ring, dY.compose(p).differences(p.compose(dX))))
    if special:
        report.record_many("hi=0", ny, located(ring, h.compose(i).differences()))
        report.record_many("ph=0", nx, located(ring, p.compose(h).differences()))
        report.record_many("hh=0", nx, located(ring, h.compose(h).differences()))
    return report


def default_labeller(k, vector, free_label):
    return "v{}".format(k + 1)


def retract_from_truncation(row, s, c, labeller=default_labeller, name=""):
    """ Special deformation retract of tr_{>=c}(row) onto the stalk complex im d_c, placed in degree c.

    The row must be split exact in degrees >= c - 1 via the contraction s (ds + sd = 1 there). The stalk is
    taken as ker d_{c-1} with the kernel basis of `linalg.kernel_basis` (coordinates read at the free
    positions); i = s restricted, p = d_c, h = -s on the truncation.

    Args:
        row: ChainComplex with constant differential entries.
        s: GradedMap of shift +1 on `row`.
        c: cutoff degree.
        labeller: (index, stalk vector, free label) -> label of the stalk basis vector.

    Raises:
        VerificationError: s is not a contraction in degrees >= c - 1.
    """
    ring = row.ring
    K = ring.field.domain
    dX = row.differential
    contraction = dX.compose(s) + s.compose(dX) - GradedMap.identity(row.module)
    failures = [x for x in contraction.differences() if x[0] >= c - 1]
    if failures:
        report = Report(name or "row")
        report.record_many("ds+sd=1", row.module.rank(), located(ring, failures))
        raise VerificationError("row is not contracted by s in degrees >= {}".format(c - 1), report)

    X = row.truncate(lo=c)
    comp = row.component(c - 1)
    below = row.component(c - 2)
    block = dX.block(c - 1)
    stalk = []
    if len(comp):
        rows = [[K.zero] * len(comp) for _ in below.labels]
        for j, label in enumerate(comp.labels):
            for t, f in block.columns.get(label, {}).items():
                if not ring.is_constant(f):
                    raise ShapeError("retract_from_truncation needs constant differential entries")
                rows[below.index[t]][j] = ring.constant_value(f)
        vectors, free = linalg.kernel_basis(rows, len(comp), K)
        for k, (vector, f) in enumerate(zip(vectors, free)):
            element = comp.element({comp.labels[j]: ring.poly_ring.ground_new(x) for j, x in enumerate(vector) if x})
            stalk.append((labeller(k, element, comp.labels[f]), element, comp.labels[f]))
    ymodule = GradedModule(
        {c: BasedModule([lab for lab, _, _ in stalk], {lab: comp.degree(fl) for lab, _, fl in stalk}, ring)}
        if stalk else {}, ring)
    Y = ChainComplex(ymodule, name=(name + "_stalk") if name else "stalk")

    s_prev = s.block(c - 1)
    i_block = ModuleMap(ymodule.component(c), X.component(c),
                        {lab: dict(s_prev.apply(vec).terms) for lab, vec, _ in stalk})
    i = GradedMap(ymodule, X.module, 0, {c: i_block} if stalk else {})

    p_blocks = {}
    if stalk:
        dc = dX.block(c)
        columns = {}
        for u in X.component(c).labels:
            w = dc.apply(X.component(c).basis_vector(u))
            col = {}
            for lab, _, fl in stalk:
                col[lab] = w.coefficient(fl)
            columns[u] = col
        p_blocks[c] = ModuleMap(X.component(c), ymodule.component(c), columns)
    p = GradedMap(X.module, ymodule, 0, p_blocks)

    h_blocks = {}
    for d in X.degrees():
        if d + 1 in X.module.components:
            h_blocks[d] = ModuleMap(X.component(d), X.component(d + 1), (-s.block(d)).columns, check=False)
    h = GradedMap(X.module, X.module, 1, h_blocks)

    ss = s.compose(s)
    special = not [x for x in ss.differences() if x[0] >= c - 1]
    sdr = SdrData(X, Y, i, p, h, special=special, name=name)
    sdr.stalk = stalk
    logger.debug("retract", name, "cutoff", c, "stalk rank", len(stalk), "special", special)
    return sdr


def in_submodule(v, gens, internal_degree=None):
    """ True iff the homogeneous element v lies in the R-span of the homogeneous `gens`.

    Decided over k in the single internal degree D of v: the unknown coefficient of g is a form of degree
    D - deg g.

    Raises:
        ShapeError: v or a generator is not homogeneous.
    """
    if not v:
        return True
    ring = v.ring
    K = ring.field.domain
    deg = internal_degree or (lambda label: label.internal_degree)
    degs = v.internal_degrees(deg)
    if len(degs) != 1:
        raise ShapeError("in_submodule needs a homogeneous element")
    D = degs.pop()

    keys = {}

    def expand(w):
        out = {}
        for label, f in w.terms.items():
            for m, c in f.items():
                key = (label, m)
                if key not in keys:
                    keys[key] = len(keys)
                out[keys[key]] = c
        return out

    target = expand(v)
    columns = []
    for g in gens:
        if not g:
            continue
        gd = g.internal_degrees(deg)
        if len(gd) != 1:
            raise ShapeError("in_submodule needs homogeneous generators")
        e = gd.pop()
        if e > D:
            continue
        for m in monomials_of_degree(ring.n, D - e):
            columns.append(expand(g.scale(ring.monomial(m))))
    size = len(keys)
    dense = [[col.get(k, K.zero) for k in range(size)] for col in columns]
    vec = [target.get(k, K.zero) for k in range(size)]
    return linalg.in_span(dense, vec, K)
