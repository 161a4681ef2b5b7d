#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath and plain Python.

Nothing here calls into the C++ library. Rerun with
    python3 tests/oracles/gen_oracles.py tests/oracles
"""
import csv
import os
import sys

import mpmath as mp

mp.mp.dps = 30


def write(path, header, rows):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([mp.nstr(v, 20) if isinstance(v, (mp.mpf,)) else v for v in r])


def mobius_table(n):
    mu = [1] * (n + 1)
    is_comp = [False] * (n + 1)
    primes = []
    mu[0] = 0
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def mertens_rows():
    n = 10**6
    mu = mobius_table(n)
    rows = []
    for x in (1, 2, 10, 100, 1000, 10**4, 10**5, 10**6):
        rows.append((x, 1, 0, sum(mu[1 : x + 1])))
    for x, q in ((1000, 3), (10**4, 4), (10**5, 7), (10**6, 10), (12345, 12), (99991, 30)):
        for a in range(q):
            rows.append((x, q, a, sum(mu[a if a else q : x + 1 : q])))
    return rows


# Characters with their value tables; mod 5 uses the generator 2 with χ(2) = i.
CHARS = {
    "1:": (1, lambda n: 1),
    "3:1": (3, lambda n: [0, 1, -1][n % 3]),
    "4:1": (4, lambda n: [0, 1, 0, -1][n % 4]),
    "5:1": (5, lambda n: [0, 1, 1j, -1j, -1][n % 5]),
    "8:1,1": (8, lambda n: [0, 1, 0, 1, 0, -1, 0, -1][n % 8]),
}


def lvalue_rows():
    points = [mp.mpc(2, 0), mp.mpc(1, 0), mp.mpc(0.5, 14), mp.mpc(0.75, 3), mp.mpc(1.5, 7), mp.mpc(-1.5, 2),
              mp.mpc(0.6, 100)]
    rows = []
    for label, (q, f) in CHARS.items():
        table = [mp.mpc(f(n)) for n in range(q)]
        for s in points:
            if label == "1:" and s == 1:
                continue
            v = mp.zeta(s) if q == 1 else mp.dirichlet(s, table)
            rows.append((label, mp.re(s), mp.im(s), mp.re(v), mp.im(v)))
    return rows


def special_rows():
    rows = []
    for z in (mp.mpc(0.5, 0), mp.mpc(3, 0), mp.mpc(-2.5, 0), mp.mpc(0.25, 10), mp.mpc(1, -40), mp.mpc(-3.3, 0.7),
              mp.mpc(12, 5)):
        d = mp.digamma(z)
        t = mp.psi(1, z)
        rows.append((mp.re(z), mp.im(z), mp.re(d), mp.im(d), mp.re(t), mp.im(t)))
    return rows


def h_series(z):
    s = mp.sin(mp.pi * z) / mp.pi
    a = mp.nsum(lambda n: 1 / (z - n) ** 2 - 1 / (z + n) ** 2, [1, mp.inf])
    return s * s * (a + 2 / z)


def beurling_rows():
    rows = []
    for z in (mp.mpc(0.3, 0), mp.mpc(1.7, 0), mp.mpc(-2.25, 0), mp.mpc(5.5, 0), mp.mpc(0.4, 0.3),
              mp.mpc(3.1, -1.2), mp.mpc(25.5, 0)):
        v = h_series(z)
        rows.append((mp.re(z), mp.im(z), mp.re(v), mp.im(v)))
    return rows


def K(z):
    return mp.sinc(mp.pi * z) ** 2


def H(z):
    if mp.re(z) < 0:
        return -H(-z)
    if z == 0:
        return mp.mpf(0)
    s = mp.sin(mp.pi * z) / mp.pi
    return 1 - K(z) * (1 - 2 * z) - 2 * s * s * mp.psi(1, 1 + z)


def F(h, delta, sign, u):
    a = delta * (u + h)
    b = delta * (h - u)
    return (H(a) + sign * K(a) + H(b) + sign * K(b)) / 2


def smooth_part(y, sign):
    # G(y) - 1 = sin(pi y)^2 R(y) on y > 0 for G = H + sign K; R has no oscillation
    return (-(1 - 2 * y) / y ** 2 - 2 * mp.psi(1, 1 + y) + sign / y ** 2) / mp.pi ** 2


def tail_integral(r, freq, phase, start):
    # ∫_start^∞ r(u) cos(2π(freq u + phase)) du; quadosc counts its zeros from 0, so shift the origin to start
    g = lambda v: r(start + v) * mp.cos(2 * mp.pi * (freq * (start + v) + phase))
    if freq == 0:
        return mp.quad(g, [0, mp.inf])
    return mp.quadosc(g, [0, mp.inf], omega=2 * mp.pi * abs(freq))


def fhat(h, delta, sign, x):
    if x == 0:
        # the non-oscillatory tail defeats quad; the total mass 2h ± 1/Δ is classical
        return 2 * h + sign / delta
    f = lambda u: F(h, delta, sign, u) * mp.cos(2 * mp.pi * x * u)
    end = h + 1
    head = mp.quad(f, sorted(set([0] + list(mp.linspace(h, end, 8 * int(delta) + 1)))))
    # past h the sgn parts cancel and F = [sin(pi a)^2 R+(a) - sin(pi b)^2 R-(b)] / 2 with a = Δ(u+h), b = Δ(u-h);
    # expanding sin^2 leaves single-frequency integrals at x and x ± Δ
    tail = 0
    for r, shift in ((lambda u: smooth_part(delta * (u + h), sign), h),
                     (lambda u: -smooth_part(delta * (u - h), -sign), -h)):
        tail += tail_integral(r, x, 0, end) / 4
        tail -= tail_integral(r, x + delta, delta * shift, end) / 8
        tail -= tail_integral(r, x - delta, -delta * shift, end) / 8
    return 2 * (head + tail)


def selberg_rows():
    mp.mp.dps = 20
    rows = []
    for h, delta, x in ((1, 2, 0), (1, 2, 0.3), (1, 2, 1.25), (0.5, 4, 0.1), (0.5, 4, 2.9), (2, 8, 5.0)):
        for sign in (1, -1):
            rows.append((h, delta, "plus" if sign > 0 else "minus", x, fhat(mp.mpf(h), mp.mpf(delta), sign, mp.mpf(x))))
    mp.mp.dps = 30
    return rows


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(os.path.abspath(__file__))
    only = set(sys.argv[2:])
    jobs = [
        ("mertens.csv", ["x", "q", "a", "value"], mertens_rows),
        ("lvalues.csv", ["label", "s_re", "s_im", "re", "im"], lvalue_rows),
        ("special.csv", ["z_re", "z_im", "digamma_re", "digamma_im", "trigamma_re", "trigamma_im"], special_rows),
        ("beurling_h.csv", ["z_re", "z_im", "re", "im"], beurling_rows),
        ("selberg_hat.csv", ["h", "delta", "sign", "x", "value"], selberg_rows),
    ]
    for name, header, rows in jobs:
        if not only or name in only:
            write(os.path.join(out, name), header, rows())


if __name__ == "__main__":
    main()
