"""Spring chain experiment: modes and the stiffness-ratio identity.

Builds a mass-spring chain with next-nearest couplings, forms its
half-bandwidth-2 matrix, prints the oscillation frequencies, and
verifies the interior stiffness-ratio identity entry by entry.
Truncating the skip springs from some index on degenerates the outer
diagonal, which is the physical route to a genuine cut in the band
profile.

    python3 scripts/spring_modes.py --seed 3 -N 8
    python3 scripts/spring_modes.py -N 9 --truncate 5
"""

import argparse

import numpy as np

import bandspec as bs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-N", "--masses", type=int, default=8)
    parser.add_argument("--truncate", type=int, default=None,
                        help="zero the skip springs from this index on")
    parser.add_argument("--uniform", action="store_true",
                        help="all masses and springs equal to one")
    args = parser.parse_args()

    N = args.masses
    if args.uniform:
        kp = [1.0] * N
        if args.truncate is not None:
            for i in range(args.truncate, N + 1):
                kp[i - 1] = 0.0
        chain = bs.SpringChain((1.0,) * N, (1.0,) * (N + 1), tuple(kp))
    else:
        rng = np.random.default_rng(args.seed)
        chain = bs.sampling.random_chain(rng, N, zero_kp_from=args.truncate)

    A = bs.build_spring_matrix(chain)
    profile = bs.validate_band(A)
    print("chain: N = %d, matrix half-bandwidth %d" % (N, A.n))
    print("profile: m = %s, j0 = %d" % (list(profile.m), profile.j0))
    print("frequencies:")
    for w in bs.frequencies(A):
        print("  %.12f" % w)

    interior = range(2, N - 1)
    if len(interior) == 0:
        print("no interior indices for the stiffness identity (need N >= 4)")
        return
    print("stiffness-ratio identity residuals:")
    for j in interior:
        lhs = (chain.k[j] + chain.kp[j - 1]) / chain.masses[j]
        res = bs.continued_fraction_check(chain, j)
        print("  j = %d: residual %.3e (lhs %.6f)" % (j, res, lhs))


if __name__ == "__main__":
    main()
