"""Reconstruction of a band matrix from a spectral function.

The inverse route orthogonalizes the graded monomial sequence e_1,
e_2, ... against the degenerate inner product carried by the spectral
function.  Exactly N members survive with positive norm (the
orthonormal basis); the candidates that collapse to norm zero reveal,
one per height residue class mod n, the n generators of the zero
class.  The band matrix is then read off as the representation of
multiplication by the variable in the surviving basis, and the initial
value matrix as the constant coefficients of the first n members.

Internally all nodes are mapped affinely onto [-1, 1] before
orthogonalization; monomial coefficient growth on wide node ranges
would otherwise swamp the zero-norm decisions.  The output polynomials
are therefore expressed in the scaled variable

    y = (x - node_center) / node_scale,

recorded in the result, and the matrix is mapped back exactly through
A = node_scale * A_scaled + node_center * I.  Every per-polynomial
node value is carried along with the coefficients, so inner products
never re-evaluate high-degree monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbiguousNorm,
    BandViolation,
    DimensionMismatch,
    IterationCapExceeded,
    NotTriangular,
    ProfileMismatch,
    ValidationError,
)
from . import vecpoly
from .vecpoly import linear_combine, trim_small
from .bandmat import BandMatrix, TriangularInit, validate_band
from .spectral import Jump, SpectralFunction, validate_sigma


@dataclass(frozen=True)
class Orthogonalization:
    """Result of the degenerate Gram-Schmidt run.

    basis and generators are vector polynomials in the scaled variable
    y = (x - node_center) / node_scale; heights are unaffected by the
    scaling.  values row k holds the numbers alpha(x_l) . basis[k](y_l)
    for all jumps l, which is all later stages need to form inner
    products (row_j . row_k is exactly <basis_j, basis_k>).
    """

    basis: tuple
    generators: tuple
    basis_heights: tuple
    generator_heights: tuple
    iterations: int
    node_scale: float
    node_center: float
    values: np.ndarray


@dataclass(frozen=True)
class Reconstruction:
    """Band matrix recovered from a spectral function, with the
    degeneration profile, the initial-value matrix, and the full
    orthogonalization diagnostics."""

    matrix: BandMatrix
    profile: object
    tinit: TriangularInit
    diagnostics: Orthogonalization


def rescaled_sigma(sigma, scale, center):
    """Copy of sigma with nodes mapped through y = (x - center)/scale.

    Coefficient vectors are unchanged, so inner products of polynomials
    in y against the result equal inner products of the corresponding
    x-polynomials against the original."""
    return SpectralFunction(
        sigma.n,
        tuple(Jump((j.x - center) / scale, j.alpha) for j in sigma.jumps),
    )


def height_degeneration_indices(gs):
    """Degeneration indices implied by the heights alone.

    Index m_j is the position k whose basis member satisfies
    h(basis_k) = h(generator_j) - n; a missing position means the
    orthogonalization output is internally inconsistent.
    """
    n = len(gs.generators)
    m = []
    for j, gh in enumerate(gs.generator_heights):
        target = gh - n
        try:
            k = gs.basis_heights.index(target)
        except ValueError:
            raise ProfileMismatch(
                "no basis height equals %d, required by generator %d at "
                "height %d" % (target, j + 1, gh)
            ) from None
        m.append(k + 1)
    return tuple(m)


def gram_schmidt(sigma, tol_zero=1e-8):
    """Orthonormalize the graded monomial sequence against sigma.

    Runs modified Gram-Schmidt with one full re-orthogonalization pass
    per candidate.  A candidate's residual norm is compared against
    tau = tol_zero * sqrt(<e_i, e_i> + 1): above 10 tau it joins the
    basis (normalized), below tau / 10 it is a zero-class event whose
    height residue mod n either contributes a new generator or repeats
    a known one, and anything in between stops the computation rather
    than guess.

    Parameters
    ----------
    sigma : SpectralFunction
        Must satisfy validate_sigma; callers that skip validation get
        undefined error types.
    tol_zero : float
        Relative zero-norm threshold, default 1e-8.

    Returns
    -------
    Orthogonalization

    Raises
    ------
    AmbiguousNorm
        A residual norm fell within a factor 10 of tau.
    IterationCapExceeded
        More candidates were consumed than any admissible spectral
        function allows (cap n(N-n+1)+1, from the height-sum identity),
        or the generator heights ended up violating that identity.
    """
    n, N = sigma.n, sigma.N
    if N <= n:
        raise DimensionMismatch(
            "need more jumps than components, got N=%d n=%d" % (N, n)
        )
    xs = np.array([j.x for j in sigma.jumps])
    xmin, xmax = float(xs.min()), float(xs.max())
    center = 0.5 * (xmin + xmax)
    scale = 0.5 * (xmax - xmin)
    if scale == 0.0:
        # a single node carries rank at most n < N, so validated input
        # cannot land here
        raise DimensionMismatch("all nodes coincide")
    y = (xs - center) / scale
    alphas = np.array([j.alpha for j in sigma.jumps])  # (N, n)

    total_height = N * n + n * (n - 1) // 2
    cap = n * (N - n + 1) + 1
    basis, gens = [], []
    bheights, gheights = [], []
    vrows = []
    known_residues = set()
    i = 0
    while len(basis) < N or len(gens) < n:
        i += 1
        if i > cap:
            raise IterationCapExceeded(
                "consumed %d candidates (cap %d) with %d basis members and "
                "%d generators; the input is not the spectral function of "
                "any admissible band matrix, or tol_zero=%g is ill-chosen"
                % (i, cap, len(basis), len(gens), tol_zero)
            )
        if len(basis) == N and len(gens) == n - 1:
            # only one generator height remains possible
            forced = total_height - sum(gheights)
            if i - 1 > forced:
                raise IterationCapExceeded(
                    "no zero-class event at height %d, where the height-sum "
                    "identity forces the last generator" % forced
                )
        slot = (i - 1) % n
        deg = (i - 1) // n
        cand = vecpoly.basis_vector(i, n)
        v = alphas[:, slot] * y ** deg
        tau = tol_zero * math.sqrt(float(v @ v) + 1.0)
        for _ in range(2):
            for k in range(len(basis)):
                h = float(vrows[k] @ v)
                if h != 0.0:
                    v = v - h * vrows[k]
                    cand = linear_combine([(1.0, cand), (-h, basis[k])])
        nrm = math.sqrt(float(v @ v))
        if nrm > 10.0 * tau:
            if len(basis) == N:
                raise IterationCapExceeded(
                    "candidate %d has norm %g after projection on a full "
                    "basis; the input is not an admissible spectral function"
                    % (i, nrm)
                )
            p = linear_combine([(1.0 / nrm, cand)])
            # lower-height subtractions never touch the leading slot,
            # so the height survives orthogonalization exactly
            assert vecpoly.height(p) == i - 1
            basis.append(p)
            bheights.append(i - 1)
            vrows.append(v / nrm)
        elif nrm < 0.1 * tau:
            if slot not in known_residues:
                known_residues.add(slot)
                gens.append(trim_small(cand))
                gheights.append(i - 1)
            # a repeated residue lies in the module generated by the
            # known generators; nothing new to record
        else:
            raise AmbiguousNorm(
                "candidate %d has residual norm %r within a factor 10 of "
                "the zero threshold %r; tighten or loosen tol_zero to "
                "decide" % (i, nrm, tau)
            )
    if sum(gheights) != total_height:
        raise IterationCapExceeded(
            "generator heights %r sum to %d, but admissible spectral "
            "functions require %d"
            % (tuple(gheights), sum(gheights), total_height)
        )
    values = np.array(vrows)
    values.flags.writeable = False
    return Orthogonalization(
        basis=tuple(basis),
        generators=tuple(gens),
        basis_heights=tuple(bheights),
        generator_heights=tuple(gheights),
        iterations=i,
        node_scale=scale,
        node_center=center,
        values=values,
    )


def matrix_from_basis(sigma, gs, verify_band=False, band_tol=1e-9):
    """Matrix of multiplication by the variable in the orthonormal basis.

    Computes c_lk = <basis_l, y * basis_k> from the stored node values
    for |l - k| <= n, symmetrizes each pair by averaging, snaps the
    entries that the height-derived degeneration profile constrains to
    zero (when they are below band_tol in the scaled frame), and maps
    the band back to the original variable.

    Parameters
    ----------
    verify_band : bool
        When true, every pair with |l - k| > n is checked against
        band_tol; the default samples only the first diagonal outside
        the band.

    Raises
    ------
    BandViolation
        An inner product outside the band exceeds band_tol.
    ProfileMismatch
        The basis and generator heights are mutually inconsistent.
    """
    n, N = sigma.n, len(gs.basis)
    xs = np.array([j.x for j in sigma.jumps])
    y = (xs - gs.node_center) / gs.node_scale
    V = gs.values
    W = V * y  # row k holds y_l * value_lk

    def braket(l, k):
        # averaged symmetric form; the two dot products differ only by
        # rounding
        return 0.5 * (float(W[l] @ V[k]) + float(W[k] @ V[l]))

    outside = range(n + 1, N) if verify_band else range(n + 1, min(n + 2, N))
    for j in outside:
        for k in range(N - j):
            val = braket(k + j, k)
            if abs(val) > band_tol:
                raise BandViolation(
                    "inner product at offset %d, position %d is %r, beyond "
                    "the declared bandwidth" % (j, k + 1, val)
                )

    m = height_degeneration_indices(gs)
    diags = []
    for j in range(n + 1):
        diags.append([braket(k + j, k) for k in range(N - j)])
    # zero-constrained ranges per diagonal: offset g is cut from the
    # degeneration index of level n - g + 1 through position N - g
    for g in range(1, n + 1):
        start = m[n - g]  # m_{n-g+1}, 1-based
        for k in range(start, N - g + 1):
            val = diags[g][k - 1]
            if abs(val) <= band_tol:
                diags[g][k - 1] = 0.0
            # else: leave it; band validation downstream will object
    s, c = gs.node_scale, gs.node_center
    diags[0] = [s * v + c for v in diags[0]]
    for g in range(1, n + 1):
        diags[g] = [s * v for v in diags[g]]
    return BandMatrix(n, N, tuple(tuple(d) for d in diags))


def initial_conditions(gs):
    """Initial-value matrix read off the first n basis members.

    Member j (j <= n) must be a constant vector polynomial; its
    component i is the entry t_ij.  The orthogonalization order makes
    the result upper triangular with positive diagonal whenever the
    input really was a spectral function.
    """
    n = gs.basis[0].n
    rows = [[0.0] * n for _ in range(n)]
    for j in range(n):
        p = gs.basis[j]
        for i, comp in enumerate(p.comps):
            if len(comp) > 1:
                raise NotTriangular(
                    "basis member %d is not constant (height %d); the "
                    "input cannot come from an admissible matrix"
                    % (j + 1, gs.basis_heights[j])
                )
            rows[i][j] = comp[0] if comp else 0.0
    return TriangularInit(n, tuple(tuple(r) for r in rows))


def reconstruct(sigma, tol_zero=1e-8, verify_band=False):
    """Full inverse problem: spectral function to band matrix.

    Validates sigma, orthogonalizes, extracts the matrix and the
    initial-value matrix, and cross-checks the degeneration profile
    found in the matrix's zero pattern against the one implied by the
    generator heights.

    Returns
    -------
    Reconstruction

    Raises
    ------
    ProfileMismatch
        The reconstructed matrix's zero pattern disagrees with the
        height-derived degeneration indices (or fails band validation
        outright).
    """
    validate_sigma(sigma)
    gs = gram_schmidt(sigma, tol_zero)
    A = matrix_from_basis(sigma, gs, verify_band=verify_band)
    try:
        profile = validate_band(A)
    except ValidationError as exc:
        raise ProfileMismatch(
            "reconstructed matrix fails band validation: %s" % exc
        ) from exc
    m = height_degeneration_indices(gs)
    if profile.m != m:
        raise ProfileMismatch(
            "zero-pattern degeneration indices %r disagree with the "
            "height-derived indices %r" % (profile.m, m)
        )
    tinit = initial_conditions(gs)
    return Reconstruction(A, profile, tinit, gs)
