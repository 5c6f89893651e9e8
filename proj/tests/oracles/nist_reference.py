#!/usr/bin/env python3
# Copyright 2026 The bsqrng Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent evaluation of the nine randomness tests on the LCG stream used
by nist_test.cc. Prints the p-values that the C++ test freezes."""

import math

import numpy as np
from scipy.special import erfc, gammaincc
from scipy.stats import norm

MASK = (1 << 64) - 1


def lcg_bits(n, state):
    out = np.empty(n, dtype=np.uint8)
    for k in range(n):
        state = (state * 6364136223846793005 + 1442695040888963407) & MASK
        out[k] = state >> 63
    return out


def monobit(e):
    s = np.sum(2 * e.astype(np.int64) - 1)
    return erfc(abs(s) / math.sqrt(len(e)) / math.sqrt(2))


def block_frequency(e, m=128):
    nb = len(e) // m
    pi = e[: nb * m].reshape(nb, m).sum(axis=1) / m
    chi = 4 * m * np.sum((pi - 0.5) ** 2)
    return gammaincc(nb / 2, chi / 2)


def runs(e):
    n = len(e)
    pi = e.sum() / n
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        return 0.0
    v = 1 + np.count_nonzero(e[1:] != e[:-1])
    return erfc(abs(v - 2 * n * pi * (1 - pi)) / (2 * math.sqrt(2 * n) * pi * (1 - pi)))


def longest_run(e):
    n = len(e)
    if n < 6272:
        m, lo, hi, pis = 8, 1, 4, [0.21484375, 0.3671875, 0.23046875, 0.1875]
    elif n < 750000:
        m, lo, hi, pis = 128, 4, 9, [0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847]
    else:
        m, lo, hi, pis = 10000, 10, 16, [0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727]
    nb = n // m
    counts = [0] * len(pis)
    for b in range(nb):
        best = cur = 0
        for bit in e[b * m : (b + 1) * m]:
            cur = cur + 1 if bit else 0
            best = max(best, cur)
        counts[min(max(best, lo), hi) - lo] += 1
    chi = sum((c - nb * p) ** 2 / (nb * p) for c, p in zip(counts, pis))
    return gammaincc((len(pis) - 1) / 2, chi / 2)


def cusum(e):
    n = len(e)
    x = 2 * e.astype(np.int64) - 1

    def p_for(seq):
        z = int(np.max(np.abs(np.cumsum(seq))))
        tdiv = lambda a, b: int(a / b)
        s1 = sum(
            norm.cdf((4 * k + 1) * z / math.sqrt(n)) - norm.cdf((4 * k - 1) * z / math.sqrt(n))
            for k in range(tdiv(tdiv(-n, z) + 1, 4), tdiv(tdiv(n, z) - 1, 4) + 1)
        )
        s2 = sum(
            norm.cdf((4 * k + 3) * z / math.sqrt(n)) - norm.cdf((4 * k + 1) * z / math.sqrt(n))
            for k in range(tdiv(tdiv(-n, z) - 3, 4), tdiv(tdiv(n, z) - 1, 4) + 1)
        )
        return 1 - s1 + s2

    return p_for(x), p_for(x[::-1])


def dft(e):
    n = 1 << (len(e).bit_length() - 1)
    x = 2 * e[:n].astype(np.float64) - 1
    mags = np.abs(np.fft.fft(x))[: n // 2]
    t = math.sqrt(math.log(1 / 0.05) * n)
    n0 = 0.95 * n / 2
    n1 = np.count_nonzero(mags < t)
    d = (n1 - n0) / math.sqrt(n * 0.95 * 0.05 / 4)
    return erfc(abs(d) / math.sqrt(2))


def pattern_counts(e, m):
    n = len(e)
    ext = np.concatenate([e, e[: m - 1]]).astype(np.int64)
    idx = np.zeros(n, dtype=np.int64)
    for j in range(m):
        idx = (idx << 1) | ext[j : j + n]
    return np.bincount(idx, minlength=1 << m)


def psi2(e, m):
    if m <= 0:
        return 0.0
    n = len(e)
    c = pattern_counts(e, m).astype(np.float64)
    return (1 << m) / n * np.sum(c * c) - n


def serial(e, m=16):
    p0, p1, p2 = psi2(e, m), psi2(e, m - 1), psi2(e, m - 2)
    d1 = p0 - p1
    d2 = p0 - 2 * p1 + p2
    return gammaincc(2 ** (m - 2), d1 / 2), gammaincc(2 ** (m - 3), d2 / 2)


def phi(e, m):
    if m == 0:
        return 0.0
    n = len(e)
    c = pattern_counts(e, m).astype(np.float64)
    c = c[c > 0] / n
    return float(np.sum(c * np.log(c)))


def approximate_entropy(e, m=10):
    n = len(e)
    apen = phi(e, m) - phi(e, m + 1)
    chi = 2 * n * (math.log(2) - apen)
    return gammaincc(2 ** (m - 1), chi / 2)


def gf2_rank(rows):
    rows = list(rows)
    rank = 0
    for bit in range(31, -1, -1):
        pivot = next((i for i in range(rank, len(rows)) if rows[i] >> bit & 1), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> bit & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def rank_prob(r, m=32):
    prod = 1.0
    for i in range(r):
        prod *= (1 - 2.0 ** (i - m)) ** 2 / (1 - 2.0 ** (i - r))
    return 2.0 ** (r * (2 * m - r) - m * m) * prod


def matrix_rank(e):
    nm = len(e) // 1024
    f = [0, 0, 0]
    for k in range(nm):
        block = e[k * 1024 : (k + 1) * 1024].reshape(32, 32)
        rows = [int("".join(map(str, r)), 2) for r in block]
        r = gf2_rank(rows)
        f[0 if r == 32 else 1 if r == 31 else 2] += 1
    p32, p31 = rank_prob(32), rank_prob(31)
    probs = [p32, p31, 1 - p32 - p31]
    chi = sum((fi - nm * p) ** 2 / (nm * p) for fi, p in zip(f, probs))
    return math.exp(-chi / 2)


if __name__ == "__main__":
    e = lcg_bits(1 << 20, 20260101)
    print("monobit", repr(monobit(e)))
    print("block_frequency", repr(block_frequency(e)))
    print("runs", repr(runs(e)))
    print("longest_run", repr(longest_run(e)))
    print("cusum", *map(repr, cusum(e)))
    print("dft", repr(dft(e)))
    print("serial", *map(repr, serial(e)))
    print("approximate_entropy", repr(approximate_entropy(e)))
    print("rank", repr(matrix_rank(e)))
    short = lcg_bits(20000, 7)
    print("short longest_run (M=128)", repr(longest_run(short)))
    print("short dft (truncated to 16384)", repr(dft(short)))
