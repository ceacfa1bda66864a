#!/usr/bin/env python3
"""Regenerate the instance files under data/ with exact fractions."""

import argparse
import json
from fractions import Fraction
from pathlib import Path

DEPTH = 24


def fs(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def padd(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    out = [x + y for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


def pscale(a, c):
    return [x * c for x in a] if c != 0 else []


def pmulx(a):
    return [Fraction(0)] + a if a else []


def peval(a, x):
    return sum(c * x**k for k, c in enumerate(a))


def legendre_moments(K):
    return [Fraction(0) if k % 2 else Fraction(1, k + 1) for k in range(K + 1)]


def pair(mu, p):
    return sum(c * mu[k] for k, c in enumerate(p))


def legendre_polys(n_max):
    # monic Legendre: gamma_n = n^2 / (4n^2 - 1)
    polys = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for n in range(1, n_max):
        g = Fraction(n * n, 4 * n * n - 1)
        polys.append(padd(pmulx(polys[n]), pscale(polys[n - 1], -g)))
    return polys[: n_max + 1]


def kernel_polys(P, mu, c):
    """Monic Q_n proportional to sum_{k<=n} P_k(c) P_k(x) / h_k."""
    out = []
    acc = []
    for n, p in enumerate(P):
        h = pair(mu, pmul(p, p))
        acc = padd(acc, pscale(p, peval(p, c) / h))
        out.append(pscale(acc, 1 / acc[-1]))
    return out


def pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def one_step_coeffs(P, Q):
    """s_n with P_n = Q_n + s_n Q_{n-1}."""
    s = [Fraction(0)]
    for n in range(1, len(P)):
        diff = padd(P[n], pscale(Q[n], -1))
        s.append(diff[-1] / Q[n - 1][-1] if diff else Fraction(0))
        assert padd(diff, pscale(Q[n - 1], -s[-1])) == []
    return s


def row(values):
    return [fs(v) for v in values]


def constant_row(i, value):
    return row([0] * i + [value] * (DEPTH + 1 - i))


def family(name):
    return {"type": "family", "name": name}


def instances():
    docs = {}
    docs["tu"] = {
        "P": family("chebyshev_T"),
        "Q": family("chebyshev_U"),
        "anchor": "P",
        "relation": {"N": 0, "M": 2, "s": {"1": constant_row(1, 0), "2": constant_row(2, Fraction(-1, 4))}},
        "config": {"n_max": 12},
    }
    docs["tu_mirrored"] = {
        "P": family("chebyshev_U"),
        "Q": family("chebyshev_T"),
        "anchor": "P",
        "relation": {"N": 2, "M": 0, "r": {"1": constant_row(1, 0), "2": constant_row(2, Fraction(-1, 4))}},
        "config": {"n_max": 12},
    }

    K = 2 * DEPTH + 16
    mu = legendre_moments(K + 1)
    leg = legendre_polys(DEPTH)
    ker = kernel_polys(leg, mu, Fraction(2))
    s = one_step_coeffs(leg, ker)
    kernel_moments = [mu[k] - mu[k + 1] / 2 for k in range(K + 1)]
    docs["christoffel"] = {
        "P": family("legendre"),
        "anchor": "P",
        "relation": {"N": 0, "M": 1, "s": {"1": row(s)}},
        "config": {"n_max": 12},
    }
    docs["christoffel_mirrored"] = {
        "P": {"type": "moments", "moments": row(kernel_moments)},
        "Q": family("legendre"),
        "anchor": "Q",
        "relation": {"N": 1, "M": 0, "r": {"1": row(s)}},
        "config": {"n_max": 12},
    }
    docs["degenerate"] = {
        "P": family("legendre"),
        "Q": family("legendre"),
        "anchor": "P",
        "relation": {"N": 1, "M": 1, "r": {"1": constant_row(1, 1)}, "s": {"1": constant_row(1, 1)}},
        "config": {"n_max": 8},
    }
    perturbed = json.loads(json.dumps(docs["tu"]))
    perturbed["relation"]["s"]["2"][7] = "-1/3"
    docs["tu_perturbed"] = perturbed

    docs["bad_gamma"] = {
        "P": {"type": "recurrence", "beta": row([0] * 6), "gamma": row([1, 1, 0, 1, 1])},
        "anchor": "P",
        "relation": {"N": 0, "M": 0},
        "config": {"n_max": 4},
    }
    short = json.loads(json.dumps(docs["tu_mirrored"]))
    for i in ("1", "2"):
        short["relation"]["r"][i] = short["relation"]["r"][i][:9]
    docs["short_table"] = short
    bad_rational = json.loads(json.dumps(docs["tu"]))
    bad_rational["relation"]["s"]["2"][3] = "1/0"
    docs["bad_rational"] = bad_rational
    bad_schema = json.loads(json.dumps(docs["tu"]))
    bad_schema["relation"]["M"] = "two"
    docs["bad_schema"] = bad_schema
    return docs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, doc in instances().items():
        (args.out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
