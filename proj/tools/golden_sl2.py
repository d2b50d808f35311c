"""Regenerates tests/data/golden_sl2.json: E(X_s)_1 for SL2 at the seed-0 default point.

Independent of the C++ code: mt19937_64 and the canonical-double draw of libstdc++ are
re-implemented here, and theta is evaluated through mpmath's q-Pochhammer symbol.
"""
import json
import math
import sys

import mpmath as mp


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & 0xFFFFFFFFFFFFFFFF
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & 0xFFFFFFFFFFFFFFFF
        self.index = 312

    def _twist(self):
        upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
        for i in range(312):
            x = (self.mt[i] & upper) | (self.mt[(i + 1) % 312] & lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.index = 0

    def __call__(self):
        if self.index >= 312:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & 0xFFFFFFFFFFFFFFFF


def uniform(rng, a, b):
    u = rng() / 2.0**64
    if u >= 1.0:
        u = math.nextafter(1.0, 0.0)
    return a + (b - a) * u


def theta(log_x, q):
    x = mp.exp(log_x)
    return (mp.exp(log_x / 2) - mp.exp(-log_x / 2)) * mp.qp(q * x, q) * mp.qp(q / x, q)


def main():
    mp.mp.dps = 40
    q = mp.mpf("0.1")
    rng = MT19937_64(0)
    point = {}
    for var in ["z1", "z2", "mu1", "mu2"]:
        re = uniform(rng, -0.5, 0.5)
        im = uniform(rng, -math.pi / 4, math.pi / 4)
        point[var] = [re, im]
    L = {v: mp.mpc(*point[v]) for v in point}
    lx = L["z2"] - L["z1"]
    ly = L["mu2"] - L["mu1"]
    tp = mp.qp(q, q) ** 2
    value = theta(lx + ly, q) * tp / (theta(lx, q) * theta(ly, q))
    json.dump({"expr": "delta(z2/z1, mu2/mu1)", "q": 0.1, "point": point,
               "value": [float(value.real), float(value.imag)]}, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
