#!/usr/bin/env python3
"""Generate lzeros-v1 files for zeta and the real primitive characters mod 3 and mod 4.

Zeros are located as sign changes of the real-valued Hardy function
Z(t) = exp(i theta(t)) L(1/2 + it) on a fine grid, refined with findroot.
Completeness below gamma_max is checked against the argument-principle count
N(T) = theta(T)/pi + S(T) (+1 for zeta) at every grid checkpoint.
"""
import argparse
import sys

import mpmath as mp

mp.mp.dps = 25

CHARS = {
    "zeta": dict(q=1, label="1:", kappa=0, values=None),
    "chi3": dict(q=3, label="3:1", kappa=1, values=[0, 1, -1]),
    "chi4": dict(q=4, label="4:1", kappa=1, values=[0, 1, 0, -1]),
}


def lfun(ch, s):
    if ch["values"] is None:
        return mp.zeta(s)
    return mp.dirichlet(s, ch["values"])


def theta(ch, t):
    q, k = ch["q"], ch["kappa"]
    if q == 1:
        return mp.siegeltheta(t)
    return t / 2 * mp.log(q / mp.pi) + mp.im(mp.loggamma((0.5 + k + 1j * t) / 2))


def hardy_z(ch, t):
    if ch["q"] == 1:
        return mp.siegelz(t)
    v = mp.expj(theta(ch, t)) * lfun(ch, mp.mpc(0.5, t))
    return mp.re(v)


def arg_on_line(ch, t):
    # continuous variation of arg L(sigma + it) from sigma = 4 down to 1/2
    prev = mp.arg(lfun(ch, mp.mpc(4, t)))
    total = prev
    sigma = mp.mpf(4)
    while sigma > 0.5:
        sigma = max(mp.mpf(0.5), sigma - mp.mpf("0.02"))
        cur = mp.arg(lfun(ch, mp.mpc(sigma, t)))
        d = cur - prev
        while d > mp.pi:
            d -= 2 * mp.pi
        while d < -mp.pi:
            d += 2 * mp.pi
        total += d
        prev = cur
    return total


def count_exact(ch, t):
    n = theta(ch, t) / mp.pi + arg_on_line(ch, t) / mp.pi
    if ch["q"] == 1:
        n += 1
    return int(mp.nint(n))


def find_zeros(ch, count, step):
    zeros = []
    t = mp.mpf(step)
    prev_t, prev_z = t, hardy_z(ch, t)
    while len(zeros) < count + 1:
        t += step
        z = hardy_z(ch, t)
        if prev_z * z < 0:
            root = mp.findroot(lambda u: hardy_z(ch, u), (prev_t, t), solver="anderson")
            zeros.append(root)
        prev_t, prev_z = t, z
    return zeros


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("which", choices=sorted(CHARS))
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--step", type=float, default=0.05)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    ch = CHARS[args.which]

    zeros = find_zeros(ch, args.count, mp.mpf(args.step))
    kept, nxt = zeros[: args.count], zeros[args.count]
    gamma_max = kept[-1] + (nxt - kept[-1]) / 2

    # every tenth zero plus gamma_max: the sign-change count must match N(T)
    for i in list(range(9, args.count, 10)):
        mid = kept[i] + (zeros[i + 1] - kept[i]) / 2
        n = count_exact(ch, mid)
        if n != i + 1:
            sys.exit(f"count mismatch at T={mid}: N={n}, found {i + 1}")
    if count_exact(ch, gamma_max) != args.count:
        sys.exit("count mismatch at gamma_max")

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("# format=lzeros-v1\n")
        fh.write(f"# q={ch['q']}\n")
        fh.write(f"# label={ch['label']}\n")
        fh.write(f"# gamma_max={mp.nstr(gamma_max, 12, strip_zeros=False)}\n")
        fh.write("# symmetric=true\n")
        fh.write(
            f"# source=mpmath {mp.__version__} Hardy Z sign changes (step {args.step}),"
            " findroot refinement, argument-principle count check\n"
        )
        for z in kept:
            fh.write(mp.nstr(z, 14, strip_zeros=False) + "\n")


if __name__ == "__main__":
    main()
