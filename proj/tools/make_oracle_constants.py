#!/usr/bin/env python3
"""Regenerates tests/unit/oracle_constants.hpp.

Reference values come from mpmath at 90 significant digits, far beyond any
precision the tests assert, and are written out as decimal string literals.
The C++ tests parse them with mpfr and compare against library results, so
the two implementations share no code path.
"""

import pathlib

import mpmath as mp

mp.mp.dps = 90

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests/unit/oracle_constants.hpp"
DIGITS = 70


def mu_table(n):
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        m = 1
        x = i
        p = 2
        ok = True
        while p * p <= x:
            if x % p == 0:
                x //= p
                if x % p == 0:
                    ok = False
                    break
                m = -m
            p += 1
        if not ok:
            out[i] = 0
        else:
            if x > 1:
                m = -m
            out[i] = m
    return out


def phi_table(n):
    out = list(range(n + 1))
    for p in range(2, n + 1):
        if out[p] == p:  # p prime
            for k in range(p, n + 1, p):
                out[k] -= out[k] // p
    return out


def lemma1_sum(fvals, x, K):
    return -mp.fsum(
        mp.mpf(fvals[k]) / k * mp.log(1 - x**k) for k in range(1, K + 1) if fvals[k]
    )


def theorem_log(N, mu, phi):
    t = (1 + mp.sqrt(5)) / 2
    return mp.fsum(
        mp.mpf(mu[k] - phi[k]) / k * mp.log(1 - t ** (-k))
        for k in range(2, N + 1)
        if mu[k] != phi[k]
    )


def fmt(name, value):
    return f'inline constexpr const char* {name} = "{mp.nstr(value, DIGITS)}";\n'


def main():
    t = (1 + mp.sqrt(5)) / 2
    mu = mu_table(256)
    phi = phi_table(256)

    lines = [
        "// Frozen reference values, regenerated by tools/make_oracle_constants.py.",
        "// Do not edit by hand.",
        "#pragma once",
        "",
        "namespace oracle {",
        "",
    ]
    add = lines.append

    add(fmt("kSqrt5", mp.sqrt(5)))
    add(fmt("kTau", t))
    add(fmt("kInvTau", 1 / t))
    add(fmt("kOneMinusInvTau", 1 - 1 / t))
    add(fmt("kLn2", mp.log(2)))
    add(fmt("kLnTau", mp.log(t)))
    add(fmt("kE", mp.e))
    add(fmt("kExpHalf", mp.exp(mp.mpf(1) / 2)))
    add(fmt("kExpThird", mp.exp(mp.mpf(1) / 3)))
    add(fmt("kExpSixth", mp.exp(mp.mpf(1) / 6)))
    add(fmt("kTauPowM97", t**-97))
    add(fmt("kTwoTauPowM97", 2 * t**-97))

    add(fmt("kLemma1PhiHalfK8", lemma1_sum(phi, mp.mpf(1) / 2, 8)))
    add(fmt("kLemma1MuHalfK8", lemma1_sum(mu, mp.mpf(1) / 2, 8)))
    add(fmt("kLemma2PhiK8", lemma1_sum(phi, 1 / t, 8)))
    add(fmt("kLemma2MuK8", lemma1_sum(mu, 1 / t, 8)))
    add(fmt("kTheoremLogN10", theorem_log(10, mu, phi)))
    add(fmt("kTheoremProdN10", mp.exp(theorem_log(10, mu, phi))))
    add(fmt("kTheoremProdN100AbsErr", abs(mp.exp(theorem_log(100, mu, phi)) - mp.e)))
    add(fmt("kTheoremProdN200AbsErr", abs(mp.exp(theorem_log(200, mu, phi)) - mp.e)))

    add("}  // namespace oracle")
    OUT.write_text("\n".join(lines[:5]) + "\n" + "".join(lines[5:]))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
