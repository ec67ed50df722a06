"""Partial sums of exp(-l_n/2) for the built-in tail laws.

Divergent tails (constant, harmonic) creep past 2; the geometric one settles.
"""

import math

from fuchsia.flute import (
    ConstantTail,
    GeometricTail,
    HarmonicTail,
    SequenceSpec,
    basmajian_term,
    classify_type,
    partial_sums,
)

CHECKPOINTS = (10, 100, 1_000, 10_000, 100_000)

TAILS = {
    "constant(1)": ConstantTail(1.0),
    "harmonic(1)": HarmonicTail(1.0),
    "geometric(0.5,0.5)": GeometricTail(0.5, 0.5),
}


def main():
    n_max = CHECKPOINTS[-1]
    print(f"{'tail':<20}{'verdict':<26}" + "".join(f"{n:>12}" for n in CHECKPOINTS))
    for name, tail in TAILS.items():
        spec = SequenceSpec((), tail)
        s = partial_sums(spec, n_max + 1)
        row, terms = [], []
        for n in range(1, n_max + 1):
            if s[n] <= s[n - 1]:
                break  # float64 partial sums stall once the terms drop below an ulp
            terms.append(basmajian_term(n, s))
            if n in CHECKPOINTS:
                row.append(math.fsum(terms))
        row += [math.fsum(terms)] * (len(CHECKPOINTS) - len(row))
        verdict = classify_type(spec).verdict.value
        print(f"{name:<20}{verdict:<26}" + "".join(f"{v:>12.6f}" for v in row))


if __name__ == "__main__":
    main()
