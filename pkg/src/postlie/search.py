"""Exhaustive finite-field searches for structure products.

Everything here works over GF(p) for a small prime p and hands the inner
loops to `fpkernel`, which picks the compiled extension when available.
Index conventions are the kernel's: a candidate is the big-endian base-p
digit string of its index, read row-major into the object being swept.

Sweeps are exhaustive over the chosen prime field, so a zero hit count
is a theorem about GF(p) and nothing more; results that feed into
rational-case reasoning carry an explicit evidence banner saying so.
"""

import os
from dataclasses import dataclass

from .errors import (GuardError, ParameterError, StructureError,
                     UnsupportedFieldError)
from .fields import GF
from .lie import LieAlgebra, is_nilpotent, is_perfect, is_solvable
from .linalg import Matrix
from .structures import BilinearProduct, PostLiePair, check_structure

GUARD_ENV = "POSTLIE_GUARD"
DEFAULT_GUARD = 10_000_000

BANNER = ("characteristic-p evidence: exhaustive over GF(%d) only, "
          "not a characteristic-zero proof")


def current_guard():
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise GuardError("%s must be an integer, got %r" % (GUARD_ENV, raw))
    if value < 1:
        raise GuardError("%s must be positive, got %d" % (GUARD_ENV, value))
    return value


def check_guard(total):
    limit = current_guard()
    if total > limit:
        raise GuardError(
            "sweep size %d exceeds the guard %d; raise the %s environment "
            "variable to allow it" % (total, limit, GUARD_ENV))
    return total


def _require_prime_field(field):
    if field.is_rational:
        raise UnsupportedFieldError(
            "exhaustive sweeps need a finite field, not Q")
    return field.p


def flat_bracket_tensor(L):
    """Row-major n^3 int list of a bracket table over GF(p)."""
    n = L.dim
    flat = [0] * (n * n * n)
    for i in range(n):
        for j in range(n):
            vec = L.bracket_basis(i, j)
            for k in range(n):
                flat[(i * n + j) * n + k] = vec[k].a
    return flat


def flat_product_tensor(product):
    n = product.dim
    flat = [0] * (n * n * n)
    for i in range(n):
        for j in range(n):
            vec = product.product_basis(i, j)
            for k in range(n):
                flat[(i * n + j) * n + k] = vec[k].a
    return flat


@dataclass(frozen=True)
class SearchSpec:
    """A fixed bracket pair to sweep products over.

    `symmetric` selects the candidate parametrization: True enumerates
    only the slots e_j . e_i with i <= j and derives the rest from the
    skew-part identity (p^(n*n*(n+1)/2) candidates), False enumerates raw
    tensors (p^(n^3)).
    """

    g: LieAlgebra
    n: LieAlgebra
    symmetric: bool = True

    def __post_init__(self):
        if self.g.field != self.n.field:
            raise ParameterError("bracket tables live over different fields")
        if self.g.dim != self.n.dim:
            raise ParameterError("bracket tables have different dimensions")
        _require_prime_field(self.g.field)
        self.g.validate()
        self.n.validate()

    @property
    def p(self):
        return self.g.field.p

    @property
    def dim(self):
        return self.g.dim

    @property
    def digit_count(self):
        n = self.dim
        return n * n * (n + 1) // 2 if self.symmetric else n ** 3

    @property
    def total(self):
        return self.p ** self.digit_count


def _index_digits(index, p, k):
    digits = [0] * k
    for t in range(k - 1, -1, -1):
        index, digits[t] = divmod(index, p)
    return digits


def _digits_index(digits, p):
    index = 0
    for d in digits:
        index = index * p + d
    return index


def decode_product(spec, index):
    """The candidate product of a sweep index, as an exact table."""
    n = spec.dim
    p = spec.p
    field = spec.g.field
    digits = _index_digits(index, p, spec.digit_count)
    table = {}
    if spec.symmetric:
        q = 0
        for i in range(n):
            for j in range(i, n):
                low = digits[q * n:(q + 1) * n]
                table[(j, i)] = tuple(low)
                if i != j:
                    gap = [g - h for g, h in zip(spec.g.bracket_basis(i, j),
                                                 spec.n.bracket_basis(i, j))]
                    table[(i, j)] = tuple((low[r] + gap[r].a) % p
                                          for r in range(n))
                q += 1
    else:
        for i in range(n):
            for j in range(n):
                table[(i, j)] = tuple(digits[(i * n + j) * n:(i * n + j + 1) * n])
    return BilinearProduct(field, n, table)


def encode_product(spec, product):
    """Inverse of decode_product; rejects tensors the parametrization
    cannot reach (a symmetric-mode product whose skew part is off)."""
    n = spec.dim
    p = spec.p
    if spec.symmetric:
        digits = []
        for i in range(n):
            for j in range(i, n):
                digits.extend(v.a for v in product.product_basis(j, i))
        candidate = decode_product(spec, _digits_index(digits, p))
        if candidate != product:
            raise ParameterError(
                "product is outside the symmetric parametrization; its "
                "skew part does not match the bracket gap")
        return _digits_index(digits, p)
    digits = []
    for i in range(n):
        for j in range(n):
            digits.extend(v.a for v in product.product_basis(i, j))
    return _digits_index(digits, p)


@dataclass(frozen=True)
class EnumerationResult:
    spec: SearchSpec
    indices: tuple
    total: int
    backend: str

    def products(self):
        return tuple(decode_product(self.spec, i) for i in self.indices)


def enumerate_products(spec, kernel=None):
    """All structure products on spec's bracket pair, by exhaustion.

    Every kernel hit is decoded and re-verified through the exact
    field-arithmetic checker before being reported, so a kernel encoding
    bug cannot produce a silent false positive.
    """
    if kernel is None:
        from . import fpkernel as kernel
    total = check_guard(spec.total)
    cg = flat_bracket_tensor(spec.g)
    cn = flat_bracket_tensor(spec.n)
    raw = kernel.product_sweep(spec.p, spec.dim, cg, cn, spec.symmetric,
                               0, total)
    hits = []
    for index in raw:
        product = decode_product(spec, index)
        report = check_structure(spec.g, spec.n, product)
        if not report.passed:
            raise GuardError(
                "kernel hit %d failed exact re-verification; kernel and "
                "checker disagree" % index)
        hits.append(index)
    return EnumerationResult(spec=spec, indices=tuple(hits), total=total,
                             backend=getattr(kernel, "BACKEND",
                                             getattr(kernel, "NAME", "?")))


def decode_matrix(field, dim, index):
    digits = _index_digits(index, field.p, dim * dim)
    return Matrix(field, [digits[r * dim:(r + 1) * dim] for r in range(dim)])


def encode_matrix(mat):
    digits = [v.a for v in mat.flat()]
    return _digits_index(digits, mat.field.p)


@dataclass(frozen=True)
class PhiSweepResult:
    n: LieAlgebra
    indices: tuple
    total: int
    backend: str


def phi_ansatz_sweep(n_alg, kernel=None):
    """Sweep every phi in End(V) with product x.y = {phi x, y}.

    A hit is a phi whose induced skew bracket x.y - y.x + {x,y} satisfies
    Jacobi and whose product passes the structure identities against that
    bracket.  When the second table is complete (all derivations inner,
    trivial center) every structure product has this shape, so the sweep
    is exhaustive over all structures with the given n, not merely over an
    ansatz.
    """
    if kernel is None:
        from . import fpkernel as kernel
    p = _require_prime_field(n_alg.field)
    n_alg.validate()
    n = n_alg.dim
    total = check_guard(p ** (n * n))
    cn = flat_bracket_tensor(n_alg)
    raw = kernel.phi_sweep(p, n, cn, 0, total)
    for index in raw:
        try:
            pair_from_phi(n_alg, decode_matrix(n_alg.field, n, index))
        except StructureError as exc:
            raise GuardError(
                "kernel hit %d failed exact re-verification; kernel and "
                "checker disagree" % index) from exc
    return PhiSweepResult(n=n_alg, indices=tuple(raw), total=total,
                          backend=getattr(kernel, "BACKEND",
                                          getattr(kernel, "NAME", "?")))


def pair_from_phi(n_alg, phi):
    """The pair with product x.y = {phi x, y} and the induced first
    bracket; raises through validation when phi is not a hit."""
    n = n_alg.dim
    field = n_alg.field
    table = {}
    brackets = {}
    for i in range(n):
        for j in range(n):
            table[(i, j)] = n_alg.bracket(tuple(phi.col(i)),
                                          [field.one if t == j else field.zero
                                           for t in range(n)])
    product = BilinearProduct(field, n, table)
    for i in range(n):
        for j in range(i + 1, n):
            vec = [a - b + c for a, b, c in zip(product.product_basis(i, j),
                                                product.product_basis(j, i),
                                                n_alg.bracket_basis(i, j))]
            brackets[(i, j)] = tuple(vec)
    g = LieAlgebra(field, n, brackets)
    g.validate()
    pair = PostLiePair(g, n_alg, product)
    pair.validate()
    return pair


def automorphism_indices(algebras, kernel=None):
    """Indices of the invertible matrices preserving every bracket table
    in `algebras` (their common automorphism group)."""
    if kernel is None:
        from . import fpkernel as kernel
    first = algebras[0]
    p = _require_prime_field(first.field)
    n = first.dim
    for other in algebras[1:]:
        if other.field != first.field or other.dim != n:
            raise ParameterError("algebras must share a field and dimension")
    total = check_guard(p ** (n * n))
    tensors = [flat_bracket_tensor(L) for L in algebras]
    return tuple(kernel.gl_invariance_sweep(p, n, tensors, 0, total))


def transform_product(product, T):
    """The product conjugated by the basis change T: the table of
    T^-1 (T x . T y)."""
    return product.change_basis(T)


@dataclass(frozen=True)
class OrbitDecomposition:
    spec: SearchSpec
    orbits: tuple
    aut_order: int

    @property
    def count(self):
        return len(self.orbits)

    def representatives(self):
        return tuple(orbit[0] for orbit in self.orbits)


def orbit_reduce(spec, indices, kernel=None):
    """Group sweep hits into isomorphism classes.

    Two products are isomorphic when a single invertible T preserving both
    bracket tables carries one to the other, so the group swept here is
    Aut(g) intersected with Aut(n) and the orbits partition the hit list.
    The partition is checked: acting on a hit must land on a hit, and the
    orbit sizes must add up to the number of hits.
    """
    hit_set = set(indices)
    auts = automorphism_indices([spec.g, spec.n], kernel=kernel)
    mats = [decode_matrix(spec.g.field, spec.dim, a) for a in auts]
    seen = set()
    orbits = []
    for index in sorted(hit_set):
        if index in seen:
            continue
        product = decode_product(spec, index)
        orbit = set()
        for T in mats:
            moved = encode_product(spec, transform_product(product, T))
            if moved not in hit_set:
                raise GuardError(
                    "automorphism carried hit %d to non-hit %d; orbit "
                    "reduction is inconsistent" % (index, moved))
            orbit.add(moved)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    if sum(len(o) for o in orbits) != len(hit_set):
        raise GuardError("orbit sizes do not add up to the hit count")
    return OrbitDecomposition(spec=spec, orbits=tuple(orbits),
                              aut_order=len(auts))


def _fp_bracket_class(L):
    """Coarse isomorphism-invariant label for a small Lie algebra over
    GF(p): enough to separate the classes the probes ask about."""
    if L.is_abelian():
        return "abelian"
    if is_perfect(L):
        return "perfect"
    if is_nilpotent(L):
        return "nilpotent"
    if is_solvable(L):
        return "solvable"
    return "other"


_PROBE_TARGETS = {
    "abelian": "abelian",
    "nilpotent": "nilpotent",
    "heisenberg": "nilpotent",
    "r3": "solvable",
    "solvable": "solvable",
    "sl2": "perfect",
}


@dataclass(frozen=True)
class ProbeResult:
    p: int
    g_class: str
    n_class: str
    total: int
    hits: tuple
    matching: tuple
    class_counts: dict
    banner: str

    @property
    def exists(self):
        return bool(self.matching)


def nonexistence_probe(g_class, n_class="sl2", p=5, kernel=None):
    """Exhaustive check over GF(p): does any structure product exist whose
    second bracket is the named simple table and whose induced first
    bracket falls in the named class?

    Since the swept n is complete, the endomorphism parametrization covers
    every structure product (see phi_ansatz_sweep), so an empty `matching`
    is a genuine nonexistence statement for GF(p).  It is evidence, not a
    proof, for characteristic zero; the banner says so and callers must
    keep it attached to any reported conclusion.
    """
    if n_class != "sl2":
        raise ParameterError(
            "probes require the complete simple table (n_class 'sl2'); "
            "for other second brackets the endomorphism sweep is not "
            "exhaustive")
    if g_class not in _PROBE_TARGETS:
        raise ParameterError("unknown first-bracket class %r; expected one "
                             "of %s" % (g_class, sorted(_PROBE_TARGETS)))
    if p in (2, 3):
        raise ParameterError(
            "the simple table degenerates mod %d; use p >= 5" % p)
    from .catalog import builtin_algebra
    n_alg = builtin_algebra("sl2", field=GF(p))
    n_alg.validate()
    sweep = phi_ansatz_sweep(n_alg, kernel=kernel)
    target = _PROBE_TARGETS[g_class]
    counts = {}
    matching = []
    for index in sweep.indices:
        pair = pair_from_phi(n_alg, decode_matrix(n_alg.field, n_alg.dim,
                                                  index))
        label = _fp_bracket_class(pair.g)
        counts[label] = counts.get(label, 0) + 1
        if label == target:
            matching.append(index)
    return ProbeResult(p=p, g_class=g_class, n_class=n_class,
                       total=sweep.total, hits=sweep.indices,
                       matching=tuple(matching), class_counts=counts,
                       banner=BANNER % p)
