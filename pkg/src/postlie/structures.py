"""Post-Lie products on a pair of Lie algebras sharing one vector space.

A pair (g, n, .) is a bilinear product x.y on the underlying space of two
bracket tables [,] (for g) and {,} (for n) satisfying three identities:

  skew-part          x.y - y.x = [x,y] - {x,y}
  module-action      [x,y].z = x.(y.z) - y.(x.z)
  derivation-action  x.{y,z} = {x.y, z} + {y, x.z}

Equivalently, (V, ., {,}) is a post-Lie algebra whose associated bracket
x.y - y.x + {x,y} recovers [,].  Checkers report one item per identity and
the first failing basis tuple with the difference of the two sides; they
never stop at the first broken identity, so a bad table shows everything
that is wrong with it at once.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (DimensionError, FieldMismatchError, NotValidatedError,
                     StructureError, UnsupportedFieldError)
from .lie import (DerivationAlgebra, LieAlgebra, Subspace, center,
                  check_lie_axioms, derivation_algebra, direct_sum,
                  is_complete_lie, is_derivation, is_nilpotent, is_solvable,
                  is_perfect, killing_is_semisimple, nilpotency_class,
                  semidirect_with_derivations, classify_low_dim)
from .linalg import (Matrix, as_vector, commutator, coordinates_in_span,
                     flatten_matrix, inverse, is_nilpotent_matrix, is_zero_vec,
                     nullspace, unit_vector, vadd, vscale, vsub, vzero)
from .report import CheckItem, CheckReport


class BilinearProduct:
    """A bilinear product stored as sparse structure constants.

    `table` maps ordered index pairs (i, j) to the coefficient vector of
    e_i . e_j; absent pairs multiply to zero.
    """

    __slots__ = ("field", "dim", "table")

    def __init__(self, field, dim, table=None):
        data = {}
        for (i, j), spec in sorted((table or {}).items()):
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(
                    "product key (%r, %r) outside 0..%d" % (i, j, dim - 1))
            vec = as_vector(field, dim, spec)
            if not is_zero_vec(vec):
                data[(i, j)] = vec
        self.field = field
        self.dim = dim
        self.table = data

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, {})

    def product_basis(self, i, j):
        return self.table.get((i, j), vzero(self.field, self.dim))

    def product(self, x, y):
        out = vzero(self.field, self.dim)
        for (i, j), vec in self.table.items():
            c = x[i] * y[j]
            if c != 0:
                out = vadd(out, vscale(c, vec))
        return out

    def left_matrix_basis(self, i):
        """The operator L(e_i): v -> e_i . v."""
        return Matrix.from_cols(self.field,
                                [self.product_basis(i, j) for j in range(self.dim)])

    def right_matrix_basis(self, j):
        """The operator R(e_j): v -> v . e_j."""
        return Matrix.from_cols(self.field,
                                [self.product_basis(i, j) for i in range(self.dim)])

    def is_zero(self):
        return not self.table

    def change_basis(self, T):
        """The same product in the basis T e_1, ..., T e_n."""
        Tinv = inverse(T)
        if Tinv is None:
            raise DimensionError("basis change matrix is singular")
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                table[(i, j)] = Tinv.apply(self.product(T.col(i), T.col(j)))
        return BilinearProduct(self.field, self.dim, table)

    def __eq__(self, other):
        if not isinstance(other, BilinearProduct):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.table == other.table)

    def __hash__(self):
        items = tuple((k, tuple(str(c) for c in v))
                      for k, v in sorted(self.table.items()))
        return hash((self.field, self.dim, items))

    def __repr__(self):
        return "BilinearProduct(dim=%d, %s, %d nonzero pairs)" % (
            self.dim, self.field.name, len(self.table))


def _lmul(product, i, v):
    """e_i . v for a coordinate vector v."""
    out = vzero(product.field, product.dim)
    for t in range(product.dim):
        if v[t] != 0:
            out = vadd(out, vscale(v[t], product.product_basis(i, t)))
    return out


def _rmul(product, v, j):
    """v . e_j for a coordinate vector v."""
    out = vzero(product.field, product.dim)
    for t in range(product.dim):
        if v[t] != 0:
            out = vadd(out, vscale(v[t], product.product_basis(t, j)))
    return out


class PostLiePair:
    """Two bracket tables and one product on a shared space."""

    __slots__ = ("g", "n", "product", "name", "_validated")

    def __init__(self, g, n, product, name=None):
        if not (g.dim == n.dim == product.dim):
            raise DimensionError("pair components of dimensions %d, %d, %d" %
                                 (g.dim, n.dim, product.dim))
        if not (g.field == n.field == product.field):
            raise FieldMismatchError("pair components over %s, %s, %s" %
                                     (g.field.name, n.field.name,
                                      product.field.name))
        self.g = g
        self.n = n
        self.product = product
        self.name = name
        self._validated = False

    @property
    def field(self):
        return self.g.field

    @property
    def dim(self):
        return self.g.dim

    @property
    def validated(self):
        return self._validated

    def validate(self):
        self.g.validate()
        self.n.validate()
        report = check_structure(self.g, self.n, self.product)
        if not report.passed:
            raise StructureError(
                "not a post-Lie structure (%s)" %
                "; ".join(it.describe() for it in report.failures()), report)
        self._validated = True
        return self

    def __repr__(self):
        label = self.name or "PostLiePair"
        return "%s(dim=%d, %s)" % (label, self.dim, self.field.name)


def _require_validated_pair(pair):
    if not pair.validated:
        raise NotValidatedError("run validate() before analysing %r" % (pair,))


def _scan_item(name, tuples, delta_fn):
    """Evaluate delta_fn over index tuples; first nonzero difference is the
    witness.  The scan short-circuits inside one identity but callers always
    collect every identity, so reports list all broken ones."""
    for idx in tuples:
        delta = delta_fn(*idx)
        if not is_zero_vec(delta):
            return CheckItem(name, False, idx, delta)
    return CheckItem(name, True)


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _triples_pair_any(n):
    return [(i, j, k) for i in range(n) for j in range(i + 1, n)
            for k in range(n)]


def _triples_any_pair(n):
    return [(i, j, k) for i in range(n) for j in range(n)
            for k in range(j + 1, n)]


def _triples_all(n):
    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]


def check_structure(g, n, product):
    """Scan the three defining identities of a pair structure."""
    dim = g.dim

    def skew(i, j):
        lhs = vsub(product.product_basis(i, j), product.product_basis(j, i))
        rhs = vsub(g.bracket_basis(i, j), n.bracket_basis(i, j))
        return vsub(lhs, rhs)

    def module(i, j, k):
        lhs = _rmul(product, g.bracket_basis(i, j), k)
        rhs = vsub(_lmul(product, i, product.product_basis(j, k)),
                   _lmul(product, j, product.product_basis(i, k)))
        return vsub(lhs, rhs)

    def derivation(i, j, k):
        lhs = _lmul(product, i, n.bracket_basis(j, k))
        e_j = unit_vector(n.field, dim, j)
        e_k = unit_vector(n.field, dim, k)
        rhs = vadd(n.bracket(product.product_basis(i, j), e_k),
                   n.bracket(e_j, product.product_basis(i, k)))
        return vsub(lhs, rhs)

    items = (
        _scan_item("skew-part", _pairs(dim), skew),
        _scan_item("module-action", _triples_pair_any(dim), module),
        _scan_item("derivation-action", _triples_any_pair(dim), derivation),
    )
    return CheckReport("post-Lie structure", items)


def check_algebra(product, n):
    """Scan the post-Lie algebra identities of (V, ., {,}) alone.

    Here the bracket {,} is the one carried by `n`; no second bracket is
    assumed.  The two computed identities say that the bracket acts by the
    antisymmetrized associator and that left multiplications are bracket
    derivations.
    """
    dim = n.dim
    jacobi = check_lie_axioms(n).item("jacobi")
    jacobi = CheckItem("bracket-jacobi", jacobi.passed, jacobi.witness,
                       jacobi.discrepancy)

    def associator_skew(i, j, k):
        lhs = _rmul(product, n.bracket_basis(i, j), k)
        rhs = vsub(
            vsub(_rmul(product, product.product_basis(j, i), k),
                 _lmul(product, j, product.product_basis(i, k))),
            vsub(_rmul(product, product.product_basis(i, j), k),
                 _lmul(product, i, product.product_basis(j, k))))
        return vsub(lhs, rhs)

    def derivation(i, j, k):
        lhs = _lmul(product, i, n.bracket_basis(j, k))
        e_j = unit_vector(n.field, dim, j)
        e_k = unit_vector(n.field, dim, k)
        rhs = vadd(n.bracket(product.product_basis(i, j), e_k),
                   n.bracket(e_j, product.product_basis(i, k)))
        return vsub(lhs, rhs)

    items = (
        jacobi,
        _scan_item("associator-skew", _triples_pair_any(dim), associator_skew),
        _scan_item("derivation-action", _triples_any_pair(dim), derivation),
    )
    return CheckReport("post-Lie algebra", items)


def associated_bracket(product, n, name=None):
    """The bracket x.y - y.x + {x,y}, as a validated Lie algebra.

    Requires (V, ., {,}) to pass `check_algebra`; the associated table then
    satisfies Jacobi automatically, and validation double-checks that.
    """
    report = check_algebra(product, n)
    if not report.passed:
        raise StructureError(
            "product is not post-Lie over this bracket (%s)" %
            "; ".join(it.describe() for it in report.failures()), report)
    table = {}
    for i in range(n.dim):
        for j in range(i + 1, n.dim):
            table[(i, j)] = vadd(
                vsub(product.product_basis(i, j), product.product_basis(j, i)),
                n.bracket_basis(i, j))
    return LieAlgebra(n.field, n.dim, table, name=name or "associated").validate()


def derived_identity_audit(pair):
    """Recheck six consequences of the pair axioms on all basis tuples.

    All of these follow from the defining identities, so a validated pair
    can only fail the audit through an implementation fault; on raw pairs
    the audit doubles as a fine-grained diagnostic.  Items:

      module-action          [x,y].z = x.(y.z) - y.(x.z)
      associator-skew        {x,y}.z = (y.x).z - y.(x.z) - (x.y).z + x.(y.z)
      right-slot-expansion   z.[x,y] = z.(x.y) - z.(y.x) + z.{x,y}
      mixed-rearrangement    [x.y,z] + [y,x.z] - x.[y,z] =
                             (x.y).z - (x.z).y + y.(x.z) - x.(y.z)
                             + x.(z.y) - z.(x.y)
      cyclic-left-action     x.{y,z} + y.{z,x} + z.{x,y} =
                             {[x,y],z} + {[y,z],x} + {[z,x],y}
      cyclic-product-action  {x,y}.z + {y,z}.x + {z,x}.y =
                             {[x,y],z} + {[y,z],x} + {[z,x],y}
                             + [{x,y},z] + [{y,z},x] + [{z,x},y]
    """
    g, n, product = pair.g, pair.n, pair.product
    dim = pair.dim
    field = pair.field

    def unit(i):
        return unit_vector(field, dim, i)

    def module(i, j, k):
        lhs = _rmul(product, g.bracket_basis(i, j), k)
        rhs = vsub(_lmul(product, i, product.product_basis(j, k)),
                   _lmul(product, j, product.product_basis(i, k)))
        return vsub(lhs, rhs)

    def associator_skew(i, j, k):
        lhs = _rmul(product, n.bracket_basis(i, j), k)
        rhs = vsub(
            vsub(_rmul(product, product.product_basis(j, i), k),
                 _lmul(product, j, product.product_basis(i, k))),
            vsub(_rmul(product, product.product_basis(i, j), k),
                 _lmul(product, i, product.product_basis(j, k))))
        return vsub(lhs, rhs)

    def right_slot(z, i, j):
        lhs = _lmul(product, z, g.bracket_basis(i, j))
        rhs = vadd(vsub(_lmul(product, z, product.product_basis(i, j)),
                        _lmul(product, z, product.product_basis(j, i))),
                   _lmul(product, z, n.bracket_basis(i, j)))
        return vsub(lhs, rhs)

    def mixed(x, y, z):
        pxy = product.product_basis(x, y)
        pxz = product.product_basis(x, z)
        lhs = vsub(vadd(g.bracket(pxy, unit(z)), g.bracket(unit(y), pxz)),
                   _lmul(product, x, g.bracket_basis(y, z)))
        rhs = vsub(_rmul(product, pxy, z), _rmul(product, pxz, y))
        rhs = vadd(rhs, _lmul(product, y, pxz))
        rhs = vsub(rhs, _lmul(product, x, product.product_basis(y, z)))
        rhs = vadd(rhs, _lmul(product, x, product.product_basis(z, y)))
        rhs = vsub(rhs, _lmul(product, z, pxy))
        return vsub(lhs, rhs)

    def cyclic_brackets_rhs(x, y, z):
        return vadd(
            vadd(n.bracket(g.bracket_basis(x, y), unit(z)),
                 n.bracket(g.bracket_basis(y, z), unit(x))),
            n.bracket(g.bracket_basis(z, x), unit(y)))

    def cyclic_left(x, y, z):
        lhs = vadd(
            vadd(_lmul(product, x, n.bracket_basis(y, z)),
                 _lmul(product, y, n.bracket_basis(z, x))),
            _lmul(product, z, n.bracket_basis(x, y)))
        return vsub(lhs, cyclic_brackets_rhs(x, y, z))

    def cyclic_product(x, y, z):
        lhs = vadd(
            vadd(_rmul(product, n.bracket_basis(x, y), z),
                 _rmul(product, n.bracket_basis(y, z), x)),
            _rmul(product, n.bracket_basis(z, x), y))
        rhs = vadd(cyclic_brackets_rhs(x, y, z), vadd(
            vadd(g.bracket(n.bracket_basis(x, y), unit(z)),
                 g.bracket(n.bracket_basis(y, z), unit(x))),
            g.bracket(n.bracket_basis(z, x), unit(y))))
        return vsub(lhs, rhs)

    items = (
        _scan_item("module-action", _triples_pair_any(dim), module),
        _scan_item("associator-skew", _triples_pair_any(dim), associator_skew),
        _scan_item("right-slot-expansion", _triples_any_pair(dim),
                   lambda z, i, j: right_slot(z, i, j)),
        _scan_item("mixed-rearrangement", _triples_all(dim), mixed),
        _scan_item("cyclic-left-action", _triples_all(dim), cyclic_left),
        _scan_item("cyclic-product-action", _triples_all(dim), cyclic_product),
    )
    return CheckReport("derived identities", items)


def left_mult_matrix(pair, x):
    """L(x): v -> x . v.  On a validated pair x -> L(x) is a g-representation
    by derivations of n; that is exactly the module-action and
    derivation-action identities, so no extra checking happens here."""
    _require_validated_pair(pair)
    out = Matrix.zeros(pair.field, pair.dim, pair.dim)
    for i in range(pair.dim):
        if x[i] != 0:
            out = out + pair.product.left_matrix_basis(i).scale(x[i])
    return out


def left_multiplications(pair):
    """The operators L(e_1), ..., L(e_n)."""
    _require_validated_pair(pair)
    return tuple(pair.product.left_matrix_basis(i) for i in range(pair.dim))


def is_complete_structure(pair):
    """Are all left multiplications L(x) nilpotent?

    Decided exactly over any field by the flag
      F_0 = 0,  F_{t+1} = {v : L(e_i) v in F_t for all i}.
    The flag reaches the whole space iff every L(x) is nilpotent: upward,
    each L(x) maps F_{t+1} into F_t, so reaching V forces L(x)^dim = 0;
    downward, simultaneous strict triangularizability follows from all
    basis operators (hence all L(x), by bilinearity inside the flag
    argument) being nilpotent.  No eigenvalue computations are involved.
    """
    _require_validated_pair(pair)
    dim = pair.dim
    field = pair.field
    mats = [pair.product.left_matrix_basis(i) for i in range(dim)]
    flag = Subspace.span(field, dim, [])
    while True:
        if flag.dim == dim:
            return True
        rows = []
        for a in flag.annihilator_rows():
            arow = Matrix(field, [a])
            for L in mats:
                rows.append((arow * L).row(0))
        nxt_basis = nullspace(Matrix(field, rows)) if rows else \
            [unit_vector(field, dim, i) for i in range(dim)]
        nxt = Subspace.span(field, dim, list(nxt_basis))
        if nxt.dim == flag.dim:
            return False
        flag = nxt


def all_right_multiplications_nilpotent(pair):
    """Are all right multiplications R(x) nilpotent?  (The mirror-image
    completeness notion; informational, not the structure completeness.)"""
    _require_validated_pair(pair)
    dim = pair.dim
    mats = [pair.product.right_matrix_basis(j) for j in range(dim)]
    # mirror of the left flag, using R in place of L
    field = pair.field
    flag = Subspace.span(field, dim, [])
    while True:
        if flag.dim == dim:
            return True
        rows = []
        for a in flag.annihilator_rows():
            arow = Matrix(field, [a])
            for R in mats:
                rows.append((arow * R).row(0))
        nxt_basis = nullspace(Matrix(field, rows)) if rows else \
            [unit_vector(field, dim, i) for i in range(dim)]
        nxt = Subspace.span(field, dim, list(nxt_basis))
        if nxt.dim == flag.dim:
            return False
        flag = nxt


def sampled_left_mult_nilpotency(pair, samples=50, seed=0):
    """Nilpotency of L(x) at pseudorandom x; a cross-check of the exact
    completeness decision, not a substitute for it."""
    _require_validated_pair(pair)
    rng = random.Random(seed)
    field = pair.field
    for _ in range(samples):
        if field.is_rational:
            x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                      for _ in range(pair.dim))
        else:
            x = tuple(field.scalar(rng.randrange(field.characteristic))
                      for _ in range(pair.dim))
        if not is_nilpotent_matrix(left_mult_matrix(pair, x)):
            return False
    return True


TAG_ZERO = "zero"
TAG_PRE_LIE = "pre-lie"
TAG_LR_PAIR = "lr"
TAG_COMMUTATIVE = "commutative"
TAG_SCALAR = "scalar-multiple"
TAG_LSA = "left-symmetric"
TAG_LR_IDENTITY = "lr-identity"
TAG_NOVIKOV = "novikov"
TAG_CYCLIC = "cyclic-symmetric"


@dataclass(frozen=True)
class SpecialCases:
    """Tags naming the special shapes a validated structure falls into."""

    tags: frozenset
    scalar_ratio: object = None

    def has(self, tag):
        return tag in self.tags


def special_case_detect(pair):
    """Detect zero, pre-Lie, LR, commutative, scalar-multiple, and the raw
    product identities (left-symmetric, LR, Novikov, cyclic-symmetric)."""
    _require_validated_pair(pair)
    g, n, product = pair.g, pair.n, pair.product
    dim = pair.dim
    tags = set()
    if product.is_zero():
        tags.add(TAG_ZERO)
    if n.is_abelian():
        tags.add(TAG_PRE_LIE)
    if g.is_abelian():
        tags.add(TAG_LR_PAIR)
    if all(product.product_basis(i, j) == product.product_basis(j, i)
           for i, j in _pairs(dim)):
        tags.add(TAG_COMMUTATIVE)

    scalar_ratio = _scalar_ratio(g, product)
    if scalar_ratio is not None:
        tags.add(TAG_SCALAR)

    def associator(i, j, k):
        return vsub(_rmul(product, product.product_basis(i, j), k),
                    _lmul(product, i, product.product_basis(j, k)))

    lsa = all(associator(i, j, k) == associator(j, i, k)
              for i, j, k in _triples_pair_any(dim))
    left_comm = all(
        _lmul(product, i, product.product_basis(j, k)) ==
        _lmul(product, j, product.product_basis(i, k))
        for i, j, k in _triples_pair_any(dim))
    right_comm = all(
        _rmul(product, product.product_basis(i, j), k) ==
        _rmul(product, product.product_basis(i, k), j)
        for i, j, k in _triples_any_pair(dim))
    cyclic = all(is_zero_vec(vsub(
        vadd(vadd(_lmul(product, x, product.product_basis(y, z)),
                  _lmul(product, y, product.product_basis(x, z))),
             _lmul(product, z, product.product_basis(x, y))),
        vadd(vadd(_rmul(product, product.product_basis(y, z), x),
                  _rmul(product, product.product_basis(x, z), y)),
             _rmul(product, product.product_basis(x, y), z))))
        for x, y, z in _triples_all(dim))

    if lsa:
        tags.add(TAG_LSA)
    if left_comm and right_comm:
        tags.add(TAG_LR_IDENTITY)
    if lsa and right_comm:
        tags.add(TAG_NOVIKOV)
    if cyclic:
        tags.add(TAG_CYCLIC)
    return SpecialCases(frozenset(tags), scalar_ratio)


def _scalar_ratio(g, product):
    """The scalar lam with x.y = lam [x,y] everywhere, or None."""
    dim = g.dim
    field = g.field
    lam = None
    for i, j in _pairs(dim):
        vec = g.bracket_basis(i, j)
        for k in range(dim):
            if vec[k] != 0:
                lam = product.product_basis(i, j)[k] / vec[k]
                break
        if lam is not None:
            break
    if lam is None:
        # abelian g: only the zero product is a scalar multiple
        return field.zero if product.is_zero() else None
    for i in range(dim):
        if not is_zero_vec(product.product_basis(i, i)):
            return None
    for i, j in _pairs(dim):
        vec = g.bracket_basis(i, j)
        if product.product_basis(i, j) != vscale(lam, vec):
            return None
        if product.product_basis(j, i) != vscale(-lam, vec):
            return None
    return lam


def product_from_endomorphism(n, phi):
    """The candidate product x.y = {phi(x), y} on a centerless algebra n.

    Returns the product plus a report with the two closure conditions:
    `bracket-gap` ({phi x, y} + {x, phi y} = [x,y] - {x,y} for the induced
    bracket, which holds by construction and is evaluated honestly), and
    `automorphism-compat` (phi of the induced bracket equals {phi x, phi y}).
    When the induced table satisfies Jacobi, the full structure scan is
    appended; the report passes iff the pair (induced g, n, .) validates.
    """
    n.validate()
    if center(n).dim != 0:
        raise StructureError("the endomorphism ansatz needs a centerless "
                             "algebra; this one has center of dimension %d"
                             % center(n).dim)
    if phi.shape != (n.dim, n.dim):
        raise DimensionError("endomorphism shape %r on dimension %d" %
                             (phi.shape, n.dim))
    dim = n.dim
    field = n.field
    table = {}
    for i in range(dim):
        for j in range(dim):
            table[(i, j)] = n.bracket(phi.col(i), unit_vector(field, dim, j))
    product = BilinearProduct(field, dim, table)
    induced = {}
    for i, j in _pairs(dim):
        induced[(i, j)] = vadd(
            vsub(product.product_basis(i, j), product.product_basis(j, i)),
            n.bracket_basis(i, j))
    g_candidate = LieAlgebra(field, dim, induced, name="induced")

    def gap(i, j):
        e_i = unit_vector(field, dim, i)
        e_j = unit_vector(field, dim, j)
        lhs = vadd(n.bracket(phi.col(i), e_j), n.bracket(e_i, phi.col(j)))
        rhs = vsub(g_candidate.bracket_basis(i, j), n.bracket_basis(i, j))
        return vsub(lhs, rhs)

    def compat(i, j):
        lhs = phi.apply(g_candidate.bracket_basis(i, j))
        rhs = n.bracket(phi.col(i), phi.col(j))
        return vsub(lhs, rhs)

    items = [
        _scan_item("bracket-gap", _pairs(dim), gap),
        _scan_item("automorphism-compat", _pairs(dim), compat),
    ]
    jacobi = check_lie_axioms(g_candidate).item("jacobi")
    items.append(CheckItem("induced-jacobi", jacobi.passed, jacobi.witness,
                           jacobi.discrepancy))
    if jacobi.passed:
        sub = check_structure(g_candidate, n, product)
        fails = sub.failures()
        items.append(CheckItem(
            "structure", sub.passed,
            fails[0].witness if fails else None,
            fails[0].discrepancy if fails else None))
    return product, CheckReport("endomorphism ansatz", tuple(items))


def endomorphism_from_structure(pair):
    """Recover phi with x.y = {phi(x), y} from a structure on a complete n.

    Each L(e_i) is a derivation of n; completeness makes every derivation
    inner and the adjoint map injective, so L(e_i) = ad(v_i) has exactly
    one solution and phi is the matrix sending e_i to v_i.
    """
    _require_validated_pair(pair)
    n = pair.n
    if not is_complete_lie(n):
        raise StructureError("phi is only determined when n is complete")
    dim = pair.dim
    field = pair.field
    ad_flats = [flatten_matrix(n.adjoint_matrix(unit_vector(field, dim, t)))
                for t in range(dim)]
    cols = []
    for i in range(dim):
        L_i = pair.product.left_matrix_basis(i)
        coords = coordinates_in_span(ad_flats, flatten_matrix(L_i), field)
        if coords is None:
            raise StructureError("internal error: left multiplication is "
                                 "not an inner derivation")
        cols.append(coords)
    phi = Matrix.from_cols(field, cols)
    for i in range(dim):
        for j in range(dim):
            expected = pair.product.product_basis(i, j)
            got = n.bracket(phi.col(i), unit_vector(field, dim, j))
            if expected != got:
                raise StructureError("internal error: recovered phi does not "
                                     "reproduce the product")
    return phi


@dataclass(frozen=True)
class Embedding:
    """A structure realized as a graph inside n semidirect Der(n)."""

    semidirect: LieAlgebra
    derivations: DerivationAlgebra
    images: tuple
    matrix: Matrix
    report: CheckReport

    @property
    def passed(self):
        return self.report.passed

    def graph_elements(self):
        """The images as (vector in n, derivation matrix) pairs, the shape
        structure_from_graph_subalgebra consumes for the inverse direction."""
        dim = self.derivations.base.dim
        out = []
        for vec in self.images:
            D = Matrix.zeros(self.derivations.base.field, dim, dim)
            for t, c in enumerate(vec[dim:]):
                if c != 0:
                    D = D + self.derivations.basis[t].scale(c)
            out.append((vec[:dim], D))
        return tuple(out)


def embed_semidirect(pair):
    """Send e_i to (e_i, L(e_i)) inside n semidirect Der(n) and verify that
    this is a homomorphism from g onto a subalgebra projecting bijectively
    to the first factor."""
    _require_validated_pair(pair)
    n = pair.n
    dim = pair.dim
    field = pair.field
    ders = derivation_algebra(n)
    ambient = semidirect_with_derivations(n, ders.basis)
    images = []
    for i in range(dim):
        L_i = pair.product.left_matrix_basis(i)
        coords = ders.coordinates(L_i)
        if coords is None:
            raise StructureError("internal error: left multiplication is "
                                 "not a derivation of n")
        images.append(unit_vector(field, dim, i) + tuple(coords))
    matrix = Matrix.from_cols(field, images)

    def hom(i, j):
        lhs = matrix.apply(pair.g.bracket_basis(i, j))
        rhs = ambient.bracket(images[i], images[j])
        return vsub(lhs, rhs)

    items = (_scan_item("homomorphism", _pairs(dim), hom),)
    report = CheckReport("semidirect embedding", items)
    return Embedding(ambient, ders, tuple(images), matrix, report)


def structure_from_graph_subalgebra(n, elements, name=None):
    """Build the pair structure carried by a graph-like subalgebra.

    `elements` lists dim(n) pairs (x_t, D_t) spanning a subspace h of
    n semidirect Der(n).  Requirements checked here: every D_t is a
    derivation, the first components form a basis (the projection to n is
    bijective on h), and h is closed under the semidirect bracket.  The
    product is then e_i . e_j = D(e_i) applied to e_j, where D is the
    derivation component matched to e_i through the projection, and the
    first-component bracket of h is the induced g.  Inverse to
    `embed_semidirect`: feeding the (e_i, L(e_i)) graph back in returns
    the original g and product.
    """
    n.validate()
    dim = n.dim
    field = n.field
    elements = list(elements)
    if len(elements) != dim:
        raise DimensionError("need exactly %d spanning pairs, got %d" %
                             (dim, len(elements)))
    for t, (x_t, D_t) in enumerate(elements):
        if not is_derivation(n, D_t):
            raise StructureError("entry %d: matrix is not a derivation" % t)
    X = Matrix.from_cols(field, [x for x, _ in elements])
    Xinv = inverse(X)
    if Xinv is None:
        raise StructureError("projection to n is not bijective on the span")
    flats = [tuple(x) + flatten_matrix(D) for x, D in elements]
    for a in range(dim):
        for b in range(a + 1, dim):
            x_a, D_a = elements[a]
            x_b, D_b = elements[b]
            first = vadd(n.bracket(x_a, x_b),
                         vsub(D_a.apply(x_b), D_b.apply(x_a)))
            second = commutator(D_a, D_b)
            target = tuple(first) + flatten_matrix(second)
            if coordinates_in_span(flats, target, field) is None:
                raise StructureError("span is not closed under the "
                                     "semidirect bracket (entries %d, %d)"
                                     % (a, b))
    # L(e_i) = sum_t Xinv[t][i] D_t  (the derivation attached to e_i)
    left = []
    for i in range(dim):
        acc = Matrix.zeros(field, dim, dim)
        for t in range(dim):
            c = Xinv.entry(t, i)
            if c != 0:
                acc = acc + elements[t][1].scale(c)
        left.append(acc)
    table = {}
    for i in range(dim):
        for j in range(dim):
            table[(i, j)] = left[i].col(j)
    product = BilinearProduct(field, dim, table)
    g_table = {}
    for i, j in _pairs(dim):
        g_table[(i, j)] = vadd(
            n.bracket_basis(i, j),
            vsub(product.product_basis(i, j), product.product_basis(j, i)))
    g = LieAlgebra(field, dim, g_table, name=name or "graph-induced")
    return PostLiePair(g, n, product, name=name).validate()


@dataclass(frozen=True)
class SplitEmbedding:
    """A copy of g complementing the diagonal inside n + n."""

    ambient: LieAlgebra
    basis: tuple
    report: CheckReport

    @property
    def passed(self):
        return self.report.passed


def split_semisimple(pair):
    """For semisimple n, realize g inside n + n transversal to the diagonal.

    Completeness of semisimple algebras turns each L(e_i) into ad(v_i);
    the vectors w_i = (e_i + v_i, v_i) then span a subalgebra of n + n
    whose bracket constants in the w-basis equal those of g, and the
    difference of the two components maps it bijectively back to n's
    underlying space.  Only defined over Q (the Killing test is the
    semisimplicity gate).
    """
    _require_validated_pair(pair)
    n = pair.n
    if not n.field.is_rational:
        raise UnsupportedFieldError("the semisimple split is gated on the "
                                    "Killing criterion, which needs Q")
    if not killing_is_semisimple(n)[1]:
        raise StructureError("n is not semisimple (degenerate Killing form)")
    dim = pair.dim
    field = pair.field
    ad_flats = [flatten_matrix(n.adjoint_matrix(unit_vector(field, dim, t)))
                for t in range(dim)]
    vs = []
    for i in range(dim):
        L_i = pair.product.left_matrix_basis(i)
        coords = coordinates_in_span(ad_flats, flatten_matrix(L_i), field)
        if coords is None:
            raise StructureError("internal error: left multiplication is "
                                 "not inner on a semisimple algebra")
        vs.append(coords)
    ambient = direct_sum(n, n, name="double")
    basis = []
    for i in range(dim):
        e_i = unit_vector(field, dim, i)
        basis.append(vadd(e_i, vs[i]) + vs[i])

    def closure(i, j):
        got = ambient.bracket(basis[i], basis[j])
        coords = coordinates_in_span(basis, got, field)
        if coords is None:
            return got  # not even inside the span: report the full vector
        return vsub(coords, pair.g.bracket_basis(i, j))

    def difference_map(i, j):
        # (p1 - p2) w_i = e_i by construction; verified honestly
        del j
        w = basis[i]
        diff = vsub(w[:dim], w[dim:])
        return vsub(diff, unit_vector(field, dim, i))

    items = (
        _scan_item("subalgebra-matches-g", _pairs(dim), closure),
        _scan_item("difference-map-bijective",
                   [(i, i) for i in range(dim)], difference_map),
    )
    report = CheckReport("semisimple split", items)
    return SplitEmbedding(ambient, tuple(basis), report)


def prelie_from_two_step(pair):
    """The deformation x o y = x.y + (1/2){x,y} on a class <= 2 pair.

    Refuses characteristic 2.  Returns the new product together with a
    report checking that o is commutator-compatible with g and satisfies
    the pre-Lie (left-symmetry) identity with respect to g.
    """
    _require_validated_pair(pair)
    n = pair.n
    if pair.field.characteristic == 2:
        raise UnsupportedFieldError("the deformation needs 1/2, so "
                                    "characteristic 2 is out")
    cls = nilpotency_class(n)
    if cls is None or cls > 2:
        raise StructureError("n must be nilpotent of class at most 2")
    dim = pair.dim
    field = pair.field
    half = field.scalar(Fraction(1, 2))
    table = {}
    for i in range(dim):
        for j in range(dim):
            table[(i, j)] = vadd(pair.product.product_basis(i, j),
                                 vscale(half, n.bracket_basis(i, j)))
    prelie = BilinearProduct(field, dim, table)

    def commutator_match(i, j):
        lhs = vsub(prelie.product_basis(i, j), prelie.product_basis(j, i))
        return vsub(lhs, pair.g.bracket_basis(i, j))

    def left_symmetry(i, j, k):
        lhs = _rmul(prelie, pair.g.bracket_basis(i, j), k)
        rhs = vsub(_lmul(prelie, i, prelie.product_basis(j, k)),
                   _lmul(prelie, j, prelie.product_basis(i, k)))
        return vsub(lhs, rhs)

    items = (
        _scan_item("commutator-matches-bracket", _pairs(dim), commutator_match),
        _scan_item("left-symmetry", _triples_pair_any(dim), left_symmetry),
    )
    return prelie, CheckReport("pre-Lie deformation", items)


CONSISTENT = "CONSISTENT"
VIOLATION = "VIOLATION"
NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class TheoremFinding:
    name: str
    status: str
    detail: str = ""

    def as_dict(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class TheoremAudit:
    """Cross-checks of structural theorems against one concrete pair.

    Over F_p the hypotheses are evaluated with characteristic-p notions
    (perfectness instead of the Killing criterion), so findings are
    advisory there: the statements are theorems over characteristic zero.
    """

    findings: tuple
    advisory: bool

    @property
    def consistent(self):
        return all(f.status != VIOLATION for f in self.findings)

    def finding(self, name):
        for f in self.findings:
            if f.name == name:
                return f
        raise KeyError(name)

    def as_dict(self):
        return {"advisory": self.advisory, "consistent": self.consistent,
                "findings": [f.as_dict() for f in self.findings]}


def _verdict(name, hypothesis, conclusion, detail=""):
    if not hypothesis:
        return TheoremFinding(name, NOT_APPLICABLE, detail)
    return TheoremFinding(name, CONSISTENT if conclusion else VIOLATION, detail)


def theorem_audit(pair):
    """Evaluate the structural theorems that constrain which (g, n) can
    carry a structure, on this validated pair."""
    _require_validated_pair(pair)
    g, n = pair.g, pair.n
    rational = pair.field.is_rational
    findings = []

    findings.append(_verdict(
        "nilpotent-g-gives-solvable-n",
        is_nilpotent(g), is_solvable(n)))

    findings.append(_verdict(
        "solvable-nonnilpotent-n-gives-imperfect-g",
        is_solvable(n) and not is_nilpotent(n), not is_perfect(g)))

    cls = nilpotency_class(n)
    two_step = cls is not None and cls <= 2
    if two_step and pair.field.characteristic == 2:
        findings.append(TheoremFinding("two-step-n-gives-prelie-g",
                                       NOT_APPLICABLE, "needs 1/2"))
        findings.append(TheoremFinding("two-step-n-gives-nonsemisimple-g",
                                       NOT_APPLICABLE, "needs 1/2"))
    else:
        if two_step:
            _, deform = prelie_from_two_step(pair)
            findings.append(_verdict("two-step-n-gives-prelie-g", True,
                                     deform.passed))
        else:
            findings.append(TheoremFinding("two-step-n-gives-prelie-g",
                                           NOT_APPLICABLE))
        if two_step and rational:
            findings.append(_verdict(
                "two-step-n-gives-nonsemisimple-g", True,
                not killing_is_semisimple(g)[1]))
        else:
            findings.append(TheoremFinding(
                "two-step-n-gives-nonsemisimple-g", NOT_APPLICABLE,
                "" if two_step is False else "Killing test needs Q"))

    if pair.dim == 3:
        if rational:
            g_simple = classify_low_dim(g).name == "sl2"
            n_simple = classify_low_dim(n).name == "sl2"
            proxy = ""
        else:
            g_simple = is_perfect(g) and center(g).dim == 0
            n_simple = is_perfect(n) and center(n).dim == 0
            proxy = "perfect-and-centerless proxy"
        findings.append(_verdict("simple-g-gives-simple-n",
                                 g_simple, n_simple, proxy))
        trivial = pair.product.is_zero() or (
            all(pair.product.product_basis(i, j) == g.bracket_basis(i, j)
                for i in range(3) for j in range(3))
            and all(n.bracket_basis(i, j) ==
                    tuple(-a for a in g.bracket_basis(i, j))
                    for i, j in _pairs(3)))
        findings.append(_verdict("simple-pair-trivial-product",
                                 g_simple and n_simple, trivial, proxy))
    else:
        findings.append(TheoremFinding("simple-g-gives-simple-n",
                                       NOT_APPLICABLE, "dimension 3 only"))
        findings.append(TheoremFinding("simple-pair-trivial-product",
                                       NOT_APPLICABLE, "dimension 3 only"))

    return TheoremAudit(tuple(findings), advisory=not rational)
