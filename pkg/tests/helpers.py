"""Shared test utilities.

stieltjes_jacobi is an independent cross-check for the tridiagonal
case: it rebuilds the recurrence coefficients of a Jacobi matrix
straight from a discrete measure by the classical three-term
recurrence, representing polynomials by their values at the nodes.
It never touches the package's vector-polynomial machinery, so
agreement between the two routes is meaningful evidence.
"""

import numpy as np


def stieltjes_jacobi(nodes, weights):
    """Recurrence coefficients of the measure sum_l w_l delta(x - x_l).

    Orthonormalizes 1, x, x^2, ... under <f, g> = sum_l w_l f(x_l) g(x_l)
    and reads off the three-term recurrence

        x p_k = b_k p_{k+1} + a_{k+1} p_k + b_{k-1} p_{k-1}.

    Returns (diag, offdiag, t11): the N diagonal entries a_1..a_N, the
    N-1 positive off-diagonal entries b_1..b_{N-1}, and the scalar
    t11 = 1/||1||, the normalization of the constant polynomial.
    """
    x = np.asarray(nodes, dtype=float)
    w = np.asarray(weights, dtype=float)
    N = len(x)
    mass = float(np.sum(w))
    p_prev = np.zeros(N)
    p_cur = np.full(N, 1.0 / np.sqrt(mass))
    diag = []
    off = []
    for k in range(N):
        a = float(np.sum(w * x * p_cur * p_cur))
        diag.append(a)
        if k == N - 1:
            break
        t = (x - a) * p_cur - (off[-1] if off else 0.0) * p_prev
        b = float(np.sqrt(np.sum(w * t * t)))
        off.append(b)
        p_prev, p_cur = p_cur, t / b
    return diag, off, 1.0 / np.sqrt(mass)
