"""Command-line front end.

Five subcommands: validate, direct, inverse, spring, roundtrip.  Exit
codes form a stable contract: 0 success, 1 parse or I/O failure, 2
validation failure (input outside the admissible class, or over the
size caps), 3 a numerical decision could not be made safely.

Sizes are capped at N <= 64 and n <= 8 here (the library itself has no
caps): the monomial-basis polynomial computations degrade predictably
beyond desk scale, and refusing loudly beats returning mush.
"""

from __future__ import annotations

import argparse
import sys

from . import fileio
from .errors import (
    InputError,
    NumericalDecisionError,
    ValidationError,
)
from .bandmat import validate_band
from .spectral import (
    Jump,
    SpectralFunction,
    canonical_spectral_function,
    jump_sum,
    transform_spectral_function,
)
from .reconstruct import reconstruct
from .springchain import build_spring_matrix, continued_fraction_check, frequencies

MAX_BANDWIDTH = 8
MAX_DIMENSION = 64


def _check_caps(n, N):
    if n > MAX_BANDWIDTH:
        raise ValidationError(
            "half-bandwidth n=%d exceeds the command-line cap %d"
            % (n, MAX_BANDWIDTH)
        )
    if N > MAX_DIMENSION:
        raise ValidationError(
            "dimension N=%d exceeds the command-line cap %d"
            % (N, MAX_DIMENSION)
        )


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError("cannot write %r: %s" % (path, exc)) from exc
        print("wrote %s" % path)


def cmd_validate(args):
    A = fileio.read_file(args.matrix_file, "matrix")
    _check_caps(A.n, A.N)
    profile = validate_band(A)
    print("m = [%s], j0 = %d"
          % (", ".join(str(v) for v in profile.m), profile.j0))
    for level in profile.empty_runs:
        print("warning: empty positive run before degeneration index m_%d"
              % level)


def cmd_direct(args):
    A = fileio.read_file(args.matrix_file, "matrix")
    _check_caps(A.n, A.N)
    sigma = canonical_spectral_function(A)
    if args.tinit is not None:
        T = fileio.read_file(args.tinit, "tinit")
        sigma = transform_spectral_function(sigma, T)
    _emit(fileio.dump_sigma(sigma), args.output)
    if args.summary:
        S = jump_sum(sigma)
        print("jump sum (n x n):")
        for row in S:
            print("  [%s]" % ", ".join(repr(float(v)) for v in row))


def cmd_inverse(args):
    sigma = fileio.read_file(args.sigma_file, "sigma")
    _check_caps(sigma.n, sigma.N)
    rec = reconstruct(sigma, tol_zero=args.tol_zero,
                      verify_band=args.verify_band)
    _emit(fileio.dump_matrix(rec.matrix), args.output)
    if args.tinit_out is not None:
        fileio.write_file(args.tinit_out, rec.tinit)
        print("wrote %s" % args.tinit_out)
    gs = rec.diagnostics
    n, N = sigma.n, sigma.N
    print("profile: m = [%s], j0 = %d"
          % (", ".join(str(v) for v in rec.profile.m), rec.profile.j0))
    print("generator heights: [%s]"
          % ", ".join(str(h) for h in gs.generator_heights))
    print("height sum: %d (expected %d)"
          % (sum(gs.generator_heights), N * n + n * (n - 1) // 2))
    print("candidates consumed: %d" % gs.iterations)


def cmd_spring(args):
    chain = fileio.read_file(args.chain_file, "chain")
    _check_caps(2, chain.N)
    A = build_spring_matrix(chain)
    did_something = False
    if args.matrix:
        _emit(fileio.dump_matrix(A), args.output)
        did_something = True
    if args.cf_check:
        interior = range(2, chain.N - 1)
        if len(interior) == 0:
            print("no interior indices to check (need N >= 4)")
        for j in interior:
            residual = continued_fraction_check(chain, j)
            print("j = %d: residual = %r" % (j, residual))
        did_something = True
    if args.frequencies or not did_something:
        print(", ".join(repr(w) for w in frequencies(A)))


def cmd_roundtrip(args):
    A = fileio.read_file(args.matrix_file, "matrix")
    _check_caps(A.n, A.N)
    validate_band(A)
    sigma = canonical_spectral_function(A)
    if args.perturb != 0.0:
        first = sigma.jumps[0]
        bumped = Jump(first.x, (first.alpha[0] + args.perturb,)
                      + first.alpha[1:])
        sigma = SpectralFunction(sigma.n, (bumped,) + sigma.jumps[1:])
    rec = reconstruct(sigma)
    dev = 0.0
    for d_in, d_out in zip(A.diags, rec.matrix.diags):
        for a, b in zip(d_in, d_out):
            dev = max(dev, abs(a - b))
    tdev = 0.0
    for i in range(A.n):
        for j in range(A.n):
            tdev = max(tdev, abs(rec.tinit.rows[i][j] - (1.0 if i == j else 0.0)))
    print("max matrix deviation = %r" % dev)
    print("max initial-value deviation from identity = %r" % tdev)
    if dev > args.tol or tdev > args.tol:
        raise ValidationError(
            "round trip deviation exceeds tol=%r" % args.tol
        )
    print("round trip OK within tol=%r" % args.tol)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bandspec",
        description="Direct and inverse spectral analysis of band "
                    "symmetric matrices with degeneration structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check class membership and "
                       "report the degeneration profile")
    p.add_argument("matrix_file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("direct", help="matrix to spectral function")
    p.add_argument("matrix_file")
    p.add_argument("--tinit", metavar="FILE",
                   help="initial-value matrix (default: identity)")
    p.add_argument("-o", "--output", metavar="FILE", default="-",
                   help="output sigma file ('-' for stdout)")
    p.add_argument("--summary", action="store_true",
                   help="also print the sum of all jump matrices")
    p.set_defaults(func=cmd_direct)

    p = sub.add_parser("inverse", help="spectral function to matrix")
    p.add_argument("sigma_file")
    p.add_argument("-o", "--output", metavar="FILE", default="-",
                   help="output matrix file ('-' for stdout)")
    p.add_argument("--tinit-out", metavar="FILE",
                   help="also write the recovered initial-value matrix")
    p.add_argument("--tol-zero", type=float, default=1e-8,
                   help="relative zero-norm threshold (default 1e-8)")
    p.add_argument("--verify-band", action="store_true",
                   help="check every inner product outside the band, "
                        "not just the first outside diagonal")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("spring", help="mass-spring chain tools")
    p.add_argument("chain_file")
    p.add_argument("--frequencies", action="store_true",
                   help="print oscillation frequencies (default action)")
    p.add_argument("--matrix", action="store_true",
                   help="emit the mass-weighted stiffness matrix")
    p.add_argument("--cf-check", action="store_true",
                   help="print the continued-fraction residual at every "
                        "interior index")
    p.add_argument("-o", "--output", metavar="FILE", default="-",
                   help="output file for --matrix ('-' for stdout)")
    p.set_defaults(func=cmd_spring)

    p = sub.add_parser("roundtrip", help="direct then inverse, report "
                       "the deviation")
    p.add_argument("matrix_file")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="acceptance threshold (default 1e-8)")
    p.add_argument("--perturb", type=float, default=0.0, metavar="EPS",
                   help="debug: bump the first jump coefficient by EPS "
                        "between the two passes")
    p.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except InputError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    except ValidationError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2
    except NumericalDecisionError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 3
    return 0
