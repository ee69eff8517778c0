"""
SplitMix64, the seeded 64-bit sequence behind every random instance.

state_{i+1} = state_i + 0x9E3779B97F4A7C15 (mod 2^64) and each output is the mix

    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

with all arithmetic mod 2^64. The seed is the initial state (reduced mod 2^64), so a seed and
the order of draws fully determine an instance on every platform.

below(n) maps one output x to (x * n) >> 64. bernoulli(p) draws one output x and succeeds iff
x < floor(p * 2^64), with p taken exactly as a fraction (floats go through their decimal repr).
"""
from fractions import Fraction


MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


def as_fraction(value):
    """
    Converts a probability to an exact Fraction in [0, 1]. 0.05 becomes 1/20, not the binary
    float closest to it.
    """
    fraction = value if isinstance(value, Fraction) else Fraction(str(value))
    if not 0 <= fraction <= 1:
        raise ValueError('Probability must lie in [0, 1], got {0}'.format(value))
    return fraction


class SplitMix64(object):
    def __init__(self, seed):
        self.seed = seed
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + GAMMA) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK
        z = ((z ^ (z >> 27)) * MIX_2) & MASK
        return z ^ (z >> 31)

    def below(self, n):
        """
        Returns an integer in [0, n).
        """
        if n < 1:
            raise ValueError('Bound must be positive, got {0}'.format(n))
        return (self.next() * n) >> 64

    def bernoulli(self, probability):
        fraction = as_fraction(probability)
        threshold = (fraction.numerator << 64) // fraction.denominator
        return self.next() < threshold

    def shuffle(self, items):
        """
        Fisher-Yates shuffle in place, drawing from the last position down.
        """
        for index in range(len(items) - 1, 0, -1):
            other = self.below(index + 1)
            items[index], items[other] = items[other], items[index]
        return items
