"""Regenerates the bundled b-file fixtures from defining formulas.

The fixtures stand in for oeis.org b-files when the network is unavailable.
Each one is computed here, independently of the Rust code, with sympy.
"""
from pathlib import Path

from sympy import bell, binomial, catalan, divisors, factorial, mobius, Rational

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures" / "oeis"
TERMS = 40


def necklace(n, f):
    return sum(mobius(n // d) * f(d) for d in divisors(n)) / Rational(n)


def inverse_euler(h):
    """h[0..] is 1-indexed data h_1, h_2, ...; returns p_1, p_2, ..."""
    c = []
    for n in range(1, len(h) + 1):
        c.append(n * h[n - 1] - sum(c[k - 1] * h[n - k - 1] for k in range(1, n)))
    return [sum(mobius(n // d) * c[d - 1] for d in divisors(n)) / Rational(n)
            for n in range(1, len(h) + 1)]


def indecomposable(n_terms):
    a = [1]
    for n in range(1, n_terms):
        a.append(factorial(n) - sum(factorial(k) * a[n - k] for k in range(1, n)))
    return a


SEQUENCES = {
    "A000108": (0, [catalan(n) for n in range(TERMS)]),
    "A000110": (0, [bell(n) for n in range(TERMS)]),
    "A000142": (0, [factorial(n) for n in range(TERMS)]),
    "A003319": (0, indecomposable(TERMS)),
    "A001037": (0, [1] + [necklace(n, lambda d: 2 ** d) for n in range(1, TERMS)]),
    "A059966": (1, [necklace(n, lambda d: 2 ** d - 1) for n in range(1, TERMS + 1)]),
    "A022553": (0, [1] + [necklace(n, lambda d: binomial(2 * d, d)) / 2 for n in range(1, TERMS)]),
    "A085686": (1, inverse_euler([bell(n) for n in range(1, TERMS + 1)])),
}

for a_number, (offset, values) in SEQUENCES.items():
    lines = [f"# {a_number}: locally generated snapshot in b-file format",
             f"# computed by tools/gen_oeis_fixtures.py, not downloaded"]
    for i, v in enumerate(values):
        assert v == int(v), (a_number, i, v)
        lines.append(f"{offset + i} {int(v)}")
    (OUT / f"b{a_number[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(a_number, [int(v) for v in values[:12]])
