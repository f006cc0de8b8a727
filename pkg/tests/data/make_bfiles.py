#!/usr/bin/env python3
"""Regenerate the vendored b-files from independent textbook definitions.

This sandbox has no network access, so the files are not downloaded from
oeis.org; each sequence is produced by a definition that does not touch the
corridorpaths package:

  A000045  Fibonacci numbers, a(0)=0, a(1)=1, a(n)=a(n-1)+a(n-2).
  A001405  central binomial coefficients, a(n) = C(n, floor(n/2)).
  A061551  walks of length n on the 9-node path graph (heights 0..8)
           starting at an end node, counted by transfer-matrix iteration
           ("paths along a corridor width 8, starting from one side").

Run from this directory:  python3 make_bfiles.py
"""
from math import comb
from pathlib import Path

N_TERMS = 51
HERE = Path(__file__).parent


def fibonacci(count):
    a, b = 0, 1
    for _ in range(count):
        yield a
        a, b = b, a + b


def central_binomial(count):
    for n in range(count):
        yield comb(n, n // 2)


def corridor_walks(width, count):
    # occupancy vector over heights 0..width; one step moves +-1 inside bounds
    state = [0] * (width + 1)
    state[0] = 1
    for _ in range(count):
        yield sum(state)
        state = [
            (state[h - 1] if h > 0 else 0) + (state[h + 1] if h < width else 0)
            for h in range(width + 1)
        ]


def write_bfile(name, values):
    lines = [f"# {name}, regenerated locally by make_bfiles.py\n"]
    lines += [f"{i} {v}\n" for i, v in enumerate(values)]
    (HERE / f"b{name[1:]}.txt").write_text("".join(lines), encoding="utf-8")


if __name__ == "__main__":
    write_bfile("A000045", fibonacci(N_TERMS))
    write_bfile("A001405", central_binomial(N_TERMS))
    write_bfile("A061551", corridor_walks(8, N_TERMS))
    print("wrote b000045.txt b001405.txt b061551.txt")
