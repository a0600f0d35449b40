# Copyright 2026 The dirp Authors
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

# Independent oracle for the lattice and continued-fraction fixtures.
# Brute-force enumeration in mpmath; values are frozen into the C++ tests.
from fractions import Fraction
from math import isqrt
from mpmath import mp, mpf, sqrt, fabs, e as E, floor

mp.dps = 80
phi = (1 + sqrt(5)) / 2


def lattice_min(alpha, R, sigma=1):
    best = None
    for k1 in range(-R, R + 1):
        for k2 in range(-R, R + 1):
            n2 = k1 * k1 + k2 * k2
            if n2 == 0 or n2 > R * R:
                continue
            # half-plane representative: first nonzero entry positive
            if k1 < 0 or (k1 == 0 and k2 < 0):
                continue
            approx = abs(k1 * float(alpha[0]) + k2 * float(alpha[1])) * n2 ** 0.5
            if best is not None and approx > float(best[0]) * 1.001 + 1e-9:
                continue
            v = sqrt(n2) ** sigma * fabs(k1 * alpha[0] + k2 * alpha[1])
            if best is None or v < best[0]:
                best = (v, (k1, k2))
    return best


def system_min_d3(beta, R):
    best = None
    for x in range(-R, R + 1):
        for y in range(-R, R + 1):
            if (x, y) == (0, 0):
                continue
            s = x * beta[0] + y * beta[1]
            dist = fabs(s - floor(s + mpf(1) / 2))
            m = max(abs(x), abs(y))
            v = dist * m ** 2
            if best is None or v < best[0]:
                best = (v, (x, y))
    return best


def system_min_d2(beta, R):
    best = None
    for x in range(-R, R + 1):
        if x == 0:
            continue
        s = x * beta
        dist = fabs(s - floor(s + mpf(1) / 2))
        v = dist * abs(x)
        if best is None or v < best[0]:
            best = (v, x)
    return best


def lattice_min_max_norm(alpha, R):
    best = None
    for k1 in range(0, R + 1):
        for k2 in range(-R, R + 1):
            if k1 == 0 and k2 <= 0:
                continue
            v = max(abs(k1), abs(k2)) * fabs(k1 * alpha[0] + k2 * alpha[1])
            if best is None or v < best[0]:
                best = (v, (k1, k2))
    return best


def cf_interval(lo, hi, depth):
    q = []
    for _ in range(depth):
        a, b = lo.numerator // lo.denominator, hi.numerator // hi.denominator
        if a != b:
            break
        q.append(a)
        if lo == a:
            break
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return q


if __name__ == "__main__":
    for R in (10, 100, 1000):
        v, k = lattice_min((mpf(1), phi), R)
        print("golden", R, mp.nstr(v, 30), k)
    v, k = lattice_min((sqrt(2), mpf(1)), 100)
    print("sqrt2 R=100", mp.nstr(v, 30), k, mp.nstr(2 - sqrt(2), 30))
    v, k = lattice_min((sqrt(2), mpf(1)), 200)
    print("sqrt2 R=200", mp.nstr(v, 30), k)
    v, k = system_min_d3((sqrt(2), sqrt(3)), 30)
    print("system d3", mp.nstr(v, 30), k)
    v, x = system_min_d2(phi, 100)
    print("system d2 phi", mp.nstr(v, 30), x)
    v, k = lattice_min_max_norm((mpf(1), phi), 100)
    print("golden max-norm R=100", mp.nstr(v, 30), k)
    mp.dps = 100
    e60 = mp.nstr(E, 61, strip_zeros=False)
    print("e60 literal", e60)
    x = Fraction(e60)
    rad = Fraction(1, 10 ** 60)
    q = cf_interval(x - rad, x + rad, 200)
    print("e cf certified depth", len(q), q[:30])
    # convergents of e and products |k||<k,(1,e)>|
    p0, p1, q0, q1 = 1, q[0], 0, 1
    convs = [(p1, q1)]
    for a in q[1:20]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        convs.append((p1, q1))
    for n, (p, qq) in enumerate(convs[:16]):
        prod = sqrt(p * p + qq * qq) * fabs(p - E * qq)
        print("e conv", n, p, qq, mp.nstr(prod, 20))
    s2 = [1] + [2] * 20
    p0, p1, q0, q1 = 1, 1, 0, 1
    convs = [(1, 1)]
    for a in s2[1:]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        convs.append((p1, q1))
    for n, (p, qq) in enumerate(convs[:10]):
        prod = sqrt(p * p + qq * qq) * fabs(p - sqrt(2) * qq)
        print("sqrt2 conv", n, p, qq, mp.nstr(prod, 20))
