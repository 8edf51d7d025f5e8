"""Lie algebras given by exact structure constants, with the standard
structural toolkit: center, derived and lower central series, Killing
form, derivation algebra, semidirect sums, and a small-dimension
classifier.

Brackets are stored sparsely for i < j only; [e_i, e_i] = 0 and the
i > j values follow by antisymmetry, so they never appear in tables.
Analysis routines insist on `validate()` having run, which scans the
Jacobi identity over all basis triples and records the first failing
triple when the table is not a Lie algebra at all.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (DimensionError, FieldMismatchError, NotValidatedError,
                     StructureError, UnsupportedFieldError)
from .linalg import (Matrix, as_vector, commutator, coordinates_in_span,
                     flatten_matrix, inverse, is_zero_vec, nullspace, rank,
                     span_basis, unit_vector, vadd, vscale, vzero)
from .report import CheckItem, CheckReport


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q or F_p."""

    __slots__ = ("field", "dim", "brackets", "name", "_validated")

    def __init__(self, field, dim, brackets=None, name=None):
        if dim < 0:
            raise DimensionError("negative dimension")
        table = {}
        for (i, j), spec in sorted((brackets or {}).items()):
            if not (0 <= i < j < dim):
                raise DimensionError(
                    "bracket key (%r, %r) must satisfy 0 <= i < j < %d" % (i, j, dim))
            vec = as_vector(field, dim, spec)
            if not is_zero_vec(vec):
                table[(i, j)] = vec
        self.field = field
        self.dim = dim
        self.brackets = table
        self.name = name
        self._validated = False

    @property
    def validated(self):
        return self._validated

    def bracket_basis(self, i, j):
        """[e_i, e_j] for any index pair, antisymmetry applied."""
        if i == j:
            return vzero(self.field, self.dim)
        if i < j:
            return self.brackets.get((i, j), vzero(self.field, self.dim))
        vec = self.brackets.get((j, i))
        return vzero(self.field, self.dim) if vec is None else tuple(-a for a in vec)

    def bracket(self, x, y):
        """Bilinear extension of the basis table."""
        out = vzero(self.field, self.dim)
        for (i, j), vec in self.brackets.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c != 0:
                out = vadd(out, vscale(c, vec))
        return out

    def adjoint_matrix(self, x):
        """ad(x): v -> [x, v] as a matrix acting on coordinate columns."""
        cols = []
        for j in range(self.dim):
            e_j = unit_vector(self.field, self.dim, j)
            cols.append(self.bracket(x, e_j))
        return Matrix.from_cols(self.field, cols)

    def is_abelian(self):
        return not self.brackets

    def validate(self):
        """Scan the Jacobi identity; mark the algebra usable on success."""
        report = check_lie_axioms(self)
        if not report.passed:
            raise StructureError(
                "bracket table is not a Lie algebra (%s)" %
                report.failures()[0].describe(), report)
        self._validated = True
        return self

    def change_basis(self, T):
        """The same algebra written in the basis T e_1, ..., T e_n."""
        Tinv = inverse(T)
        if Tinv is None:
            raise DimensionError("basis change matrix is singular")
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vec = Tinv.apply(self.bracket(T.col(i), T.col(j)))
                table[(i, j)] = vec
        out = LieAlgebra(self.field, self.dim, table, name=self.name)
        out._validated = self._validated
        return out

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.brackets == other.brackets)

    def __hash__(self):
        items = tuple((k, tuple(str(c) for c in v))
                      for k, v in sorted(self.brackets.items()))
        return hash((self.field, self.dim, items))

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return "%s(dim=%d, %s)" % (label, self.dim, self.field.name)


def _require_validated(L):
    if not L.validated:
        raise NotValidatedError(
            "run validate() before analysing %r" % (L,))


def check_lie_axioms(L):
    """Jacobi identity over all basis triples i < j < k.

    Antisymmetry is structural (only i < j is stored), so the single
    computed item is the Jacobi scan; it carries the first failing triple.
    """
    witness = None
    discrepancy = None
    n = L.dim
    for i in range(n):
        e_i = unit_vector(L.field, n, i)
        for j in range(i + 1, n):
            e_j = unit_vector(L.field, n, j)
            for k in range(j + 1, n):
                e_k = unit_vector(L.field, n, k)
                total = vadd(
                    vadd(L.bracket(L.bracket_basis(i, j), e_k),
                         L.bracket(L.bracket_basis(j, k), e_i)),
                    L.bracket(L.bracket_basis(k, i), e_j))
                if not is_zero_vec(total):
                    witness = (i, j, k)
                    discrepancy = total
                    break
            if witness:
                break
        if witness:
            break
    item = CheckItem("jacobi", witness is None, witness, discrepancy)
    return CheckReport("lie axioms (%s)" % (L.name or "bracket table"), (item,))


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient with a canonical RREF basis."""

    field: object
    ambient: int
    basis: tuple

    @classmethod
    def span(cls, field, ambient, vectors):
        return cls(field, ambient, span_basis(field, ambient, vectors))

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return coordinates_in_span(list(self.basis), v, self.field) is not None

    def coordinates(self, v):
        return coordinates_in_span(list(self.basis), v, self.field)

    def annihilator_rows(self):
        """Rows spanning the solutions of <row, b> = 0 for all basis b."""
        if not self.basis:
            return tuple(unit_vector(self.field, self.ambient, i)
                         for i in range(self.ambient))
        return nullspace(Matrix(self.field, list(self.basis)))


def center(L):
    """Elements bracketing to zero with the whole algebra."""
    _require_validated(L)
    n = L.dim
    if n == 0:
        return Subspace.span(L.field, 0, [])
    rows = []
    for j in range(n):
        # row block: x -> [x, e_j], one row per output component
        cols = [L.bracket_basis(i, j) for i in range(n)]
        for k in range(n):
            rows.append(tuple(cols[i][k] for i in range(n)))
    kern = nullspace(Matrix(L.field, rows))
    return Subspace.span(L.field, n, list(kern))


def _bracket_span(L, left_vectors, right_vectors):
    prods = []
    for u in left_vectors:
        for v in right_vectors:
            w = L.bracket(u, v)
            if not is_zero_vec(w):
                prods.append(w)
    return prods


def series(L, kind="derived"):
    """Derived or lower central series, as subspaces, until stabilization.

    The chain starts at the whole algebra and stops at the first repeat;
    a terminating zero term is included when reached.
    """
    _require_validated(L)
    if kind not in ("derived", "lower-central"):
        raise ValueError("kind must be 'derived' or 'lower-central'")
    full = Subspace.span(L.field, L.dim,
                         [unit_vector(L.field, L.dim, i) for i in range(L.dim)])
    chain = [full]
    while True:
        current = chain[-1]
        if kind == "derived":
            prods = _bracket_span(L, current.basis, current.basis)
        else:
            prods = _bracket_span(L, full.basis, current.basis)
        nxt = Subspace.span(L.field, L.dim, prods)
        if nxt.dim == current.dim:
            break
        chain.append(nxt)
        if nxt.dim == 0:
            break
    return tuple(chain)


def is_solvable(L):
    return series(L, "derived")[-1].dim == 0


def is_nilpotent(L):
    return series(L, "lower-central")[-1].dim == 0


def nilpotency_class(L):
    """Length of the lower central series when it reaches zero, else None."""
    chain = series(L, "lower-central")
    if chain[-1].dim != 0:
        return None
    return len(chain) - 1


def is_perfect(L):
    _require_validated(L)
    derived = Subspace.span(
        L.field, L.dim,
        [vec for vec in L.brackets.values()])
    return derived.dim == L.dim


def killing_is_semisimple(L):
    """Killing form matrix and its nondegeneracy.

    kappa(x, y) = trace(ad x ad y).  Nondegeneracy of kappa characterizes
    semisimplicity in characteristic zero only, so this refuses F_p input.
    """
    _require_validated(L)
    if not L.field.is_rational:
        raise UnsupportedFieldError(
            "the Killing criterion is only conclusive over Q")
    n = L.dim
    ads = [L.adjoint_matrix(unit_vector(L.field, n, i)) for i in range(n)]
    form = Matrix(L.field, [[(ads[i] * ads[j]).trace() for j in range(n)]
                            for i in range(n)])
    return form, rank(form) == n


def is_derivation(L, D):
    """Does D satisfy D[x,y] = [Dx,y] + [x,Dy] on all basis pairs?"""
    if D.shape != (L.dim, L.dim):
        raise DimensionError("derivation candidate of shape %r on dim %d" %
                             (D.shape, L.dim))
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = D.apply(L.bracket_basis(i, j))
            rhs = vadd(L.bracket(D.col(i), unit_vector(L.field, L.dim, j)),
                       L.bracket(unit_vector(L.field, L.dim, i), D.col(j)))
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class DerivationAlgebra:
    """Basis of Der(L) inside gl(dim), in canonical nullspace order."""

    base: LieAlgebra
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, M):
        flats = [flatten_matrix(D) for D in self.basis]
        return coordinates_in_span(flats, flatten_matrix(M),
                                   self.base.field) is not None

    def coordinates(self, M):
        flats = [flatten_matrix(D) for D in self.basis]
        return coordinates_in_span(flats, flatten_matrix(M), self.base.field)


def derivation_algebra(L):
    """Solve the derivation equations exactly and return a basis.

    Unknowns are the entries d[r][c] of D, flattened row major.  For each
    stored bracket (i < j) and each output component k the linear relation
      sum_l c(i,j)_l d[k][l] - sum_r B(r,j)_k d[r][i] - sum_r B(i,r)_k d[r][j] = 0
    is imposed.  Every returned matrix is re-checked against the bracket.
    """
    _require_validated(L)
    n = L.dim
    unknowns = n * n
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            c_ij = L.bracket_basis(i, j)
            for k in range(n):
                row = [L.field.zero] * unknowns
                for l in range(n):
                    row[k * n + l] = row[k * n + l] + c_ij[l]
                for r in range(n):
                    row[r * n + i] = row[r * n + i] - L.bracket_basis(r, j)[k]
                    row[r * n + j] = row[r * n + j] - L.bracket_basis(i, r)[k]
                rows.append(tuple(row))
    if not rows:
        kern = tuple(unit_vector(L.field, unknowns, t) for t in range(unknowns))
    else:
        kern = nullspace(Matrix(L.field, rows))
    basis = []
    for flat in kern:
        D = Matrix(L.field, [flat[r * n:(r + 1) * n] for r in range(n)])
        if not is_derivation(L, D):
            raise StructureError("internal error: derivation solver produced "
                                 "a non-derivation")
        basis.append(D)
    return DerivationAlgebra(L, tuple(basis))


def is_complete_lie(L):
    """Trivial center and every derivation inner."""
    _require_validated(L)
    if center(L).dim != 0:
        return False
    return derivation_algebra(L).dim == L.dim


def semidirect_with_derivations(L, derivations, name=None):
    """The semidirect sum of L with a subalgebra of its derivations.

    Basis: the n basis vectors of L followed by the given derivations.
    Bracket: [(x, D), (x', D')] = ([x, x'] + D x' - D' x, [D, D']).
    The derivation list must be linearly independent and closed under the
    matrix commutator, and the result is validated before it is returned.
    """
    _require_validated(L)
    derivations = list(derivations)
    n = L.dim
    k = len(derivations)
    for t, D in enumerate(derivations):
        if not is_derivation(L, D):
            raise StructureError("entry %d is not a derivation" % t)
    flats = [flatten_matrix(D) for D in derivations]
    if k and rank(Matrix(L.field, flats)) != k:
        raise StructureError("derivation list is linearly dependent")
    dim = n + k
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = L.bracket_basis(i, j)
            if not is_zero_vec(vec):
                table[(i, j)] = vec + (L.field.zero,) * k
    for i in range(n):
        e_i = unit_vector(L.field, n, i)
        for t, D in enumerate(derivations):
            # [e_i, D] = -D(e_i) inside the L block
            vec = vneg_tuple(D.apply(e_i))
            if not is_zero_vec(vec):
                table[(i, n + t)] = vec + (L.field.zero,) * k
    for s in range(k):
        for t in range(s + 1, k):
            C = commutator(derivations[s], derivations[t])
            coords = coordinates_in_span(flats, flatten_matrix(C), L.field)
            if coords is None:
                raise StructureError(
                    "derivation span is not closed under the commutator "
                    "(entries %d, %d)" % (s, t))
            vec = vzero(L.field, n) + tuple(coords)
            if not is_zero_vec(vec):
                table[(n + s, n + t)] = vec
    out = LieAlgebra(L.field, dim, table,
                     name=name or "semidirect(%s, der%d)" % (L.name or "L", k))
    return out.validate()


def vneg_tuple(v):
    return tuple(-a for a in v)


def direct_sum(L1, L2, name=None):
    """Block-diagonal direct sum of two algebras over one field."""
    if L1.field != L2.field:
        raise FieldMismatchError("direct sum over %s and %s" %
                                 (L1.field.name, L2.field.name))
    _require_validated(L1)
    _require_validated(L2)
    n1, n2 = L1.dim, L2.dim
    table = {}
    for (i, j), vec in L1.brackets.items():
        table[(i, j)] = vec + vzero(L1.field, n2)
    for (i, j), vec in L2.brackets.items():
        table[(n1 + i, n1 + j)] = vzero(L1.field, n1) + vec
    out = LieAlgebra(L1.field, n1 + n2, table,
                     name=name or "sum(%s, %s)" % (L1.name or "a", L2.name or "b"))
    return out.validate()


def homomorphism_defect(M, src, dst):
    """First basis pair where M fails to be a Lie homomorphism, else None."""
    if M.shape != (dst.dim, src.dim):
        raise DimensionError("matrix shape %r does not map dim %d to dim %d" %
                             (M.shape, src.dim, dst.dim))
    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = M.apply(src.bracket_basis(i, j))
            rhs = dst.bracket(M.col(i), M.col(j))
            if lhs != rhs:
                return (i, j)
    return None


@dataclass(frozen=True)
class Classification:
    """Invariant data for algebras of dimension at most three over Q.

    `name` is one of abelian, r2, n3, r3, r3_lambda, sl2, or None when the
    isomorphism type is not rational (the eigenvalue ratio of the split
    torus action is irrational or complex).  `ratio_set` lists the ratio
    pair {lam, 1/lam} when rational, `(0,)` for the degenerate product
    r2 + abelian(1), and `(1,)` for both r3 and r3_lambda(1); the two are
    told apart by `action_semisimple`.  `ratio_invariant` is trace^2/det
    of the action on the two-dimensional derived algebra, a basis-free
    rational invariant that exists even when the ratio itself does not.
    """

    dim: int
    name: str | None
    derived_dim: int
    center_dim: int
    killing_rank: int
    solvable: bool
    nilpotent: bool
    nilpotency_class: int | None
    perfect: bool
    ratio_set: tuple | None
    ratio_invariant: Fraction | None
    action_semisimple: bool | None

    def fingerprint(self):
        return (self.dim, self.derived_dim, self.center_dim, self.killing_rank,
                self.solvable, self.nilpotent, self.nilpotency_class,
                self.perfect, self.ratio_set, self.ratio_invariant,
                self.action_semisimple)


def _rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def classify_low_dim(L):
    """Isomorphism type of a validated algebra of dimension <= 3 over Q."""
    _require_validated(L)
    if not L.field.is_rational:
        raise UnsupportedFieldError("classification is implemented over Q only")
    if L.dim > 3:
        raise DimensionError("classification supports dimension <= 3")
    n = L.dim
    derived = series(L, "derived")
    # a length-one chain means [L, L] = L (the series repeats immediately)
    derived_dim = derived[1].dim if len(derived) > 1 else n
    cent = center(L)
    killing = killing_is_semisimple(L)[0]
    killing_rank = rank(killing)
    solvable = is_solvable(L)
    nilpotent = is_nilpotent(L)
    nclass = nilpotency_class(L)
    perfect = is_perfect(L)

    name = None
    ratio_set = None
    ratio_invariant = None
    action_semisimple = None

    if derived_dim == 0:
        name = "abelian"
    elif n == 2:
        name = "r2"
    elif perfect:
        # dim 3, perfect: the split simple algebra (Killing rank must be 3)
        name = "sl2"
        if killing_rank != 3:
            raise StructureError("internal error: perfect dim-3 algebra with "
                                 "degenerate Killing form")
    elif nilpotent:
        name = "n3"
    elif derived_dim == 1:
        # r2 + abelian(1): one-dimensional derived algebra, not nilpotent
        name = "r3_lambda"
        ratio_set = (Fraction(0),)
        action_semisimple = True
    else:
        # solvable with two-dimensional abelian derived algebra; classify by
        # the action of a complement generator on [L, L]
        basis = derived[1].basis
        x_index = next(i for i in range(n)
                       if not derived[1].contains(unit_vector(L.field, n, i)))
        e_x = unit_vector(L.field, n, x_index)
        cols = []
        for b in basis:
            coords = derived[1].coordinates(L.bracket(e_x, b))
            if coords is None:
                raise StructureError("internal error: derived algebra is not "
                                     "an ideal")
            cols.append(coords)
        M = Matrix.from_cols(L.field, cols)
        tr = M.trace()
        det = M.entry(0, 0) * M.entry(1, 1) - M.entry(0, 1) * M.entry(1, 0)
        if det == 0:
            raise StructureError("internal error: complement acts singularly "
                                 "on a two-dimensional derived algebra")
        ratio_invariant = Fraction(tr) * Fraction(tr) / Fraction(det)
        disc_char = tr * tr - 4 * det
        scalar = (M.entry(0, 1) == 0 and M.entry(1, 0) == 0
                  and M.entry(0, 0) == M.entry(1, 1))
        action_semisimple = disc_char != 0 or scalar
        if disc_char == 0:
            ratio_set = (Fraction(1),)
            name = "r3_lambda" if scalar else "r3"
        else:
            # eigenvalue ratio lam solves lam^2 - (k - 2) lam + 1 = 0 with
            # k = trace^2/det; rational exactly when k(k - 4) is a square
            k = ratio_invariant
            root = _rational_sqrt(k * (k - 4))
            if root is not None:
                lam1 = (k - 2 + root) / 2
                lam2 = (k - 2 - root) / 2
                ratio_set = tuple(sorted({lam1, lam2}))
                name = "r3_lambda"

    return Classification(
        dim=n, name=name, derived_dim=derived_dim, center_dim=cent.dim,
        killing_rank=killing_rank, solvable=solvable, nilpotent=nilpotent,
        nilpotency_class=nclass, perfect=perfect, ratio_set=ratio_set,
        ratio_invariant=ratio_invariant, action_semisimple=action_semisimple)
