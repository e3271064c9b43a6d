"""Symmetric band matrices with a nested degeneration pattern.

The matrices handled here are real symmetric N x N with half-bandwidth
n, stored as one list per diagonal (main diagonal first).  Membership
in the admissible class requires each outer diagonal, scanned from the
outermost inward, to consist of a strictly positive run followed by
exact zeros; the position of the first zero on each level is a
degeneration index m_j.  ``validate_band`` infers those indices and
checks the sign pattern.

``solve_recurrence`` builds, for a validated matrix and an upper
triangular matrix of initial values, the N recurrence solutions p_k
(vector polynomials that are orthonormal under the matrix's spectral
function) together with the n zero-norm generators q_i collected at the
degeneration positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    InnermostDegeneration,
    LeadingZero,
    NegativeConstrainedEntry,
    NonContiguousPositiveRun,
    NotTriangular,
    ZeroPivot,
)
from . import vecpoly
from .vecpoly import VecPoly, linear_combine, shift_mul


@dataclass(frozen=True)
class BandMatrix:
    """Packed symmetric band matrix.

    diags[j] holds d^(j)_1 .. d^(j)_{N-j}, the entries at positions
    (k+j, k) and (k, k+j).  Only one triangle is stored, so instances
    are symmetric by construction.  n = 0 (diagonal matrix) is allowed
    at the storage level for tiny physical models; class validation
    requires n >= 1.
    """

    n: int
    N: int
    diags: tuple

    def __post_init__(self):
        if self.n < 0 or self.N <= self.n:
            raise DimensionMismatch(
                "need 0 <= n < N, got n=%d N=%d" % (self.n, self.N)
            )
        if len(self.diags) != self.n + 1:
            raise DimensionMismatch(
                "expected %d diagonals, got %d" % (self.n + 1, len(self.diags))
            )
        canon = []
        for j, d in enumerate(self.diags):
            d = tuple(float(v) for v in d)
            if len(d) != self.N - j:
                raise DimensionMismatch(
                    "diagonal %d must have %d entries, got %d"
                    % (j, self.N - j, len(d))
                )
            canon.append(d)
        object.__setattr__(self, "diags", tuple(canon))

    def entry(self, j, k):
        """d^(j)_k with 1-based position k."""
        return self.diags[j][k - 1]


@dataclass(frozen=True)
class DegenerationProfile:
    """Degeneration indices m_1 < ... < m_n and the count j0 of genuine
    degenerations (the trailing n - j0 indices sit at their forced
    values m_j = N - n + j).

    empty_runs lists the levels j (1-based) where m_j = m_{j-1} + 1,
    i.e. the positive run between two consecutive degenerations is
    empty.  Such profiles are admissible but worth flagging: they only
    arise from back-to-back cuts.
    """

    m: tuple
    j0: int
    empty_runs: tuple = ()

    def __post_init__(self):
        prev = 0
        for v in self.m:
            if v <= prev:
                raise DimensionMismatch("degeneration indices must increase")
            prev = v


@dataclass(frozen=True)
class TriangularInit:
    """Upper triangular matrix of initial values for the recurrence.

    Stored as a full square tuple of rows; entries below the diagonal
    must be exactly zero and the diagonal nonzero.
    """

    n: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionMismatch(
                "expected %d rows, got %d" % (self.n, len(self.rows))
            )
        canon = []
        for i, row in enumerate(self.rows):
            row = tuple(float(v) for v in row)
            if len(row) != self.n:
                raise DimensionMismatch("row %d has wrong length" % i)
            if row[i] == 0.0:
                raise NotTriangular("diagonal entry %d is zero" % (i + 1))
            if any(v != 0.0 for v in row[:i]):
                raise NotTriangular(
                    "row %d has nonzero entries below the diagonal" % (i + 1)
                )
            canon.append(row)
        object.__setattr__(self, "rows", tuple(canon))

    @classmethod
    def identity(cls, n):
        return cls(n, tuple(tuple(1.0 if i == j else 0.0 for j in range(n))
                            for i in range(n)))

    def dense(self):
        return np.array(self.rows, dtype=float)


@dataclass(frozen=True)
class RecurrenceTable:
    """Solutions of the three-term-like band recurrence.

    basis holds p_1 .. p_N (each an n-component VecPoly); generators
    holds the n zero-norm combinations q_1 .. q_n read off at the
    degeneration positions.
    """

    basis: tuple
    generators: tuple

    @property
    def n(self):
        return len(self.generators)

    @property
    def N(self):
        return len(self.basis)


def validate_band(A):
    """Check membership of A in the admissible band class and infer its
    degeneration profile.

    Scans the diagonals outermost-in.  On level j (diagonal n - j) the
    constrained positions are m_j + 1 .. N - n + j; the first exact
    zero there, if any, is the degeneration index m_{j+1}, entries
    before it must be strictly positive and entries after it through
    the end of the constrained range exactly zero.  With no zero the
    index takes its forced value N - n + j + 1 and every later level is
    forced as well.  Positions up to m_j, like the whole main diagonal,
    are unconstrained.

    Returns
    -------
    DegenerationProfile

    Raises
    ------
    LeadingZero
        d^(n)_1 <= 0, which would put the first degeneration at
        position 1 in violation of 1 < m_1 <= N-n+1.
    NegativeConstrainedEntry, NonContiguousPositiveRun
        Sign-pattern violations inside a constrained range.
    InnermostDegeneration
        A genuine zero cut on the innermost off-diagonal, which would
        make all n levels degenerate; the class allows at most n - 1.
    """
    n, N = A.n, A.N
    if n < 1:
        raise DimensionMismatch("class membership needs n >= 1")
    if A.diags[n][0] <= 0.0:
        raise LeadingZero(
            "d^(%d)_1 = %r violates 1 < m_1 < N-n+1: the outermost diagonal "
            "must start with a positive entry" % (n, A.diags[n][0])
        )
    m = []
    empty_runs = []
    j0 = None
    prev = 0  # m_0
    for j in range(n):
        d = A.diags[n - j]
        lo, hi = prev + 1, N - n + j
        cut = None
        for k in range(lo, hi + 1):
            v = d[k - 1]
            if cut is None:
                if v > 0.0:
                    continue
                if v < 0.0:
                    raise NegativeConstrainedEntry(
                        "d^(%d)_%d = %r must be positive or zero"
                        % (n - j, k, v)
                    )
                cut = k
            else:
                if v > 0.0:
                    raise NonContiguousPositiveRun(
                        "d^(%d)_%d = %r is positive after the zero cut at "
                        "position %d" % (n - j, k, v, cut)
                    )
                if v < 0.0:
                    raise NegativeConstrainedEntry(
                        "d^(%d)_%d = %r must be zero past the cut at %d"
                        % (n - j, k, v, cut)
                    )
        if cut is None:
            if j0 is None:
                j0 = j
            m.append(hi + 1)
        else:
            # once a level has no cut, later scan ranges are empty and
            # cannot produce one, so cuts always precede forced levels
            assert j0 is None
            if j == n - 1:
                raise InnermostDegeneration(
                    "zero at position %d of the innermost off-diagonal: at "
                    "most %d degeneration levels are allowed" % (cut, n - 1)
                )
            if cut == prev + 1:
                # no positive entry between consecutive cuts; legal but
                # unusual, so flag it (cannot happen at level 0, where
                # the leading entry is already known positive)
                empty_runs.append(j + 1)
            m.append(cut)
        prev = m[-1]
    return DegenerationProfile(tuple(m), n if j0 is None else j0,
                               tuple(empty_runs))


def to_dense(A):
    """Unpack to a dense symmetric numpy array."""
    M = np.zeros((A.N, A.N))
    for j, d in enumerate(A.diags):
        for i, v in enumerate(d):
            M[i + j, i] = v
            M[i, i + j] = v
    return M


def shrink_band(A):
    """Drop outermost diagonals that are identically zero.

    Physics constructors may legitimately emit an all-zero outer
    diagonal (a chain without next-nearest springs).  Such a matrix is
    not admissible at its declared bandwidth, but is after shrinking.
    """
    n = A.n
    while n > 0 and all(v == 0.0 for v in A.diags[n]):
        n -= 1
    if n == A.n:
        return A
    return BandMatrix(n, A.N, A.diags[: n + 1])


def solve_recurrence(A, T, profile):
    """Solve the band recurrence for all N positions.

    The defining equations are the rows of A r(z) = z r(z) read as
    constraints on vector polynomials: row k expresses the entry with
    the highest undetermined index through earlier ones, dividing by
    the positive in-run diagonal entry.  At a degeneration position the
    would-be pivot is zero, so the row instead yields a zero-norm
    combination; those n leftovers are the generators.

    The first n solutions are the constant vector polynomials given by
    the columns of T (solution j has constant component i equal to
    T[i][j]).

    Parameters
    ----------
    A : BandMatrix
        Must already satisfy validate_band with the given profile.
    T : TriangularInit
        Initial values; T.n must equal A.n.
    profile : DegenerationProfile
        As returned by validate_band(A).

    Returns
    -------
    RecurrenceTable
    """
    n, N = A.n, A.N
    if T.n != n:
        raise DimensionMismatch(
            "initial values are %d x %d but the matrix has half-bandwidth %d"
            % (T.n, T.n, n)
        )
    cuts = set(profile.m)
    # columns of T as constant vector polynomials
    basis = [
        vecpoly.vec_poly([(T.rows[i][j],) for i in range(n)]) for j in range(n)
    ]
    generators = []
    for k in range(1, N + 1):
        s = sum(1 for mj in profile.m if mj < k)
        terms = [(1.0, shift_mul(basis[k - 1])), (-A.entry(0, k), basis[k - 1])]
        for j in range(1, n + 1):
            if k - j >= 1:
                terms.append((-A.entry(j, k - j), basis[k - j - 1]))
        # forward couplings strictly below the pivot diagonal; at a
        # degeneration position (s cuts already passed, this is cut
        # s + 1) the same bound n - s - 1 skips the vanished entries
        for j in range(1, n - s):
            terms.append((-A.entry(j, k), basis[k + j - 1]))
        r = linear_combine(terms)
        if k in cuts:
            generators.append(r)
        else:
            pivot = A.entry(n - s, k)
            if pivot <= 0.0:
                raise ZeroPivot(
                    "entry d^(%d)_%d = %r is not positive; the profile "
                    "marks it as inside a positive run" % (n - s, k, pivot)
                )
            new_index = k + n - s
            assert new_index == len(basis) + 1, "recurrence lost contiguity"
            basis.append(linear_combine([(1.0 / pivot, r)]))
    assert len(basis) == N and len(generators) == n
    return RecurrenceTable(tuple(basis), tuple(generators))


def generator_matrix(table, z):
    """Evaluate the generators at z, stacked as rows of an n x n array.

    Entry (i, j) is component j of generator i.  The determinant of
    this matrix vanishes exactly at the eigenvalues of the underlying
    band matrix.
    """
    n = table.n
    M = np.empty((n, n))
    for i, q in enumerate(table.generators):
        M[i, :] = vecpoly.evaluate(q, z)
    return M


def rank_defect(table, z, tol=1e-9):
    """n minus the numerical rank of the generator matrix at z.

    Rank is decided by singular values against tol times a reference
    scale.  The reference is the larger of the top singular value and
    the l1 coefficient mass of the generators evaluated at |z|; the
    second term matters when the whole matrix vanishes (an eigenvalue
    whose multiplicity equals n), where any purely relative rule would
    mistake rounding noise for rank.  At an eigenvalue the defect
    equals the eigenspace dimension; away from the spectrum it is zero.
    """
    M = generator_matrix(table, z)
    base = max(1.0, abs(z))
    mass = 0.0
    for q in table.generators:
        for c in q.comps:
            acc = 0.0
            for d, v in enumerate(c):
                acc += abs(v) * base ** d
            mass = max(mass, acc)
    svals = np.linalg.svd(M, compute_uv=False)
    thresh = tol * max(float(svals[0]), mass)
    if thresh == 0.0:
        return table.n
    return table.n - int(np.count_nonzero(svals > thresh))
