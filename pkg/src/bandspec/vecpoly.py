"""Vector polynomials with n components and their height grading.

A vector polynomial bundles n scalar polynomials into a single column
vector.  The grading used throughout this package is the *height*

    h(r) = max_j (n * deg(R_j) + j - 1),        h(0) = -infinity,

which totally orders the monomial slots (component j, degree d) and is
compatible with multiplication by the variable: multiplying a nonzero
vector polynomial by z raises its height by exactly n.

Coefficients are stored ascending by degree and kept in canonical
trimmed form: the stored leading coefficient of every nonzero component
is nonzero, and a zero component stores no coefficients at all.
Trimming compares against exact zero only; construction never
introduces spurious tiny coefficients by itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, MixedDimension

#: Height of the zero vector polynomial.  A float so that it compares
#: below every integer height and propagates through sums.
NEG_INF = float("-inf")


def _trim(coeffs):
    """Drop trailing exact zeros, returning an ascending tuple."""
    c = list(coeffs)
    while c and c[-1] == 0.0:
        c.pop()
    return tuple(float(v) for v in c)


@dataclass(frozen=True)
class VecPoly:
    """Immutable vector polynomial.

    comps[j] holds the ascending coefficients of component j+1; a zero
    component is the empty tuple.  Instances are created through
    :func:`vec_poly` (or the other constructors below), which normalize
    to canonical trimmed form.
    """

    comps: tuple

    @property
    def n(self):
        return len(self.comps)

    def is_zero(self):
        return all(len(c) == 0 for c in self.comps)


def vec_poly(components):
    """Build a VecPoly from n coefficient iterables (ascending degree).

    Parameters
    ----------
    components : iterable of iterables of float
        One coefficient sequence per component.  Trailing exact zeros
        are trimmed; an empty sequence is the zero component.
    """
    comps = tuple(_trim(c) for c in components)
    if not comps:
        raise DimensionMismatch("a vector polynomial needs at least one component")
    return VecPoly(comps)


def zero_poly(n):
    """The zero vector polynomial with n components."""
    if n < 1:
        raise DimensionMismatch("component count must be >= 1, got %d" % n)
    return VecPoly(((),) * n)


def basis_vector(i, n):
    """The i-th member (i >= 1) of the graded monomial sequence.

    Component ((i-1) mod n) + 1 is z**((i-1) // n), every other
    component is zero; its height is exactly i - 1.  Consecutive
    members sweep the components cyclically before the degree steps up,
    so the sequence realizes every height 0, 1, 2, ... exactly once.
    """
    if i < 1 or n < 1:
        raise DimensionMismatch("need i >= 1 and n >= 1, got i=%d n=%d" % (i, n))
    slot = (i - 1) % n
    deg = (i - 1) // n
    comps = [()] * n
    comps[slot] = (0.0,) * deg + (1.0,)
    return VecPoly(tuple(comps))


def degree(coeffs):
    """Degree of one trimmed coefficient tuple (NEG_INF when empty)."""
    return len(coeffs) - 1 if coeffs else NEG_INF


def height(p):
    """Height of a vector polynomial.

    Returns an int for nonzero input and NEG_INF for the zero
    polynomial.  The maximum runs over nonzero components only.
    """
    n = p.n
    best = NEG_INF
    for j, c in enumerate(p.comps):
        if c:
            h = n * (len(c) - 1) + j
            if h > best:
                best = h
    return best


def evaluate(p, x):
    """Evaluate componentwise at a scalar, Horner form.

    Returns a tuple of p.n floats.
    """
    out = []
    for c in p.comps:
        acc = 0.0
        for v in reversed(c):
            acc = acc * x + v
        out.append(acc)
    return tuple(out)


def shift_mul(p):
    """Multiply by the variable: r(z) -> z * r(z).

    Raises every nonzero component degree by one, hence the height by
    exactly n.  The zero polynomial maps to itself.
    """
    return VecPoly(tuple((0.0,) + c if c else () for c in p.comps))


def linear_combine(terms):
    """Exact coefficientwise sum of scaled vector polynomials.

    Parameters
    ----------
    terms : iterable of (float, VecPoly)
        Scale factors and operands; all operands must share the same
        component count.

    Returns
    -------
    VecPoly
        sum_k c_k * p_k in canonical trimmed form.

    Raises
    ------
    MixedDimension
        If the operands disagree on the component count.
    """
    terms = list(terms)
    if not terms:
        raise DimensionMismatch("linear_combine needs at least one term")
    n = terms[0][1].n
    for _, p in terms:
        if p.n != n:
            raise MixedDimension(
                "cannot combine vector polynomials with %d and %d components"
                % (n, p.n)
            )
    comps = []
    for j in range(n):
        length = max(len(p.comps[j]) for _, p in terms)
        acc = [0.0] * length
        for c, p in terms:
            for d, v in enumerate(p.comps[j]):
                acc[d] += c * v
        comps.append(_trim(acc))
    return VecPoly(tuple(comps))


def trim_small(p, rel=1e-12):
    """Zero out coefficients below rel * (largest absolute coefficient).

    Used to clean residue polynomials coming out of orthogonalization,
    where exact cancellations leave rounding dust.  The zero polynomial
    passes through unchanged.
    """
    top = 0.0
    for c in p.comps:
        for v in c:
            if abs(v) > top:
                top = abs(v)
    if top == 0.0:
        return p
    cut = rel * top
    return VecPoly(
        tuple(_trim(0.0 if abs(v) <= cut else v for v in c) for c in p.comps)
    )


def is_interpolation_solution(p, sigma, tol):
    """Whether p lies in the zero class of sigma's inner product.

    True iff the jump-wise quadratic form (alpha(x_k) . p(x_k))**2 is
    below tol * scale at every jump, where the scale accounts for the
    node magnitudes and the coefficient mass of p, so the answer is
    invariant under rescaling p.

    ``sigma`` may be any object with attributes ``n`` and ``jumps``,
    each jump carrying a node ``x`` and a coefficient vector ``alpha``
    of length n.
    """
    if p.n != sigma.n:
        raise DimensionMismatch(
            "polynomial has %d components, spectral function expects %d"
            % (p.n, sigma.n)
        )
    maxdeg = max(degree(c) for c in p.comps)
    if maxdeg == NEG_INF:
        return True
    coeff_sq = sum(v * v for c in p.comps for v in c)
    xtop = max(abs(jump.x) for jump in sigma.jumps)
    scale = (1.0 + xtop) ** (2 * maxdeg) * coeff_sq
    for jump in sigma.jumps:
        vals = evaluate(p, jump.x)
        form = sum(a * v for a, v in zip(jump.alpha, vals))
        if form * form > tol * scale:
            return False
    return True
