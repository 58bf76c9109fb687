#!/usr/bin/env python3
# Copyright 2026 The dpdeid Authors
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
"""Independent reference for the seeded samplers.

Re-implements MT19937-64 from the published recurrence (no C++ involved),
the stream-seed derivation, the Laplace inverse CDF and the exponential
mechanism over the first ten rows of tests/data/bfc_cities.csv. Prints the
values frozen into tests/golden_test.cc.
"""

import csv
import math
import os

MASK = (1 << 64) - 1


class MT64:
    NN, MM = 312, 156
    MATRIX_A = 0xB5026F5AA96619E9
    UM, LM = 0xFFFFFFFF80000000, 0x7FFFFFFF

    def __init__(self, seed):
        self.mt = [seed & MASK]
        for i in range(1, self.NN):
            prev = self.mt[-1]
            self.mt.append((6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK)
        self.mti = self.NN

    def _twist(self):
        mt = self.mt
        for i in range(self.NN):
            x = (mt[i] & self.UM) | (mt[(i + 1) % self.NN] & self.LM)
            xa = x >> 1
            if x & 1:
                xa ^= self.MATRIX_A
            mt[i] = mt[(i + self.MM) % self.NN] ^ xa
        self.mti = 0

    def next(self):
        if self.mti >= self.NN:
            self._twist()
        x = self.mt[self.mti]
        self.mti += 1
        x ^= (x >> 29) & 0x5555555555555555
        x ^= (x << 17) & 0x71D67FFFEDA60000
        x ^= (x << 37) & 0xFFF7EEE000000000
        x ^= x >> 43
        return x & MASK

    def uniform(self):
        return ((self.next() >> 11) + 0.5) * 2.0**-53


def fnv1a64(data):
    h = 0xCBF29CE484222325
    for b in data.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & MASK
    return h


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


def stream_seed(master, stream_id):
    return splitmix64(master ^ fnv1a64(stream_id))


def laplace_inverse_cdf(u, b):
    c = u - 0.5
    return -b * math.copysign(1.0, c) * math.log1p(-2.0 * abs(c))


def sanitize_temporal(magnitude, eps, rng):
    noisy = max(0.0, magnitude + laplace_inverse_cdf(rng.uniform(), 1.0 / eps))
    return int(math.floor(noisy + 0.5))  # llround on non-negatives


def haversine_km(a, b):
    r = 6371.0088
    p1, p2 = math.radians(a[0]), math.radians(b[0])
    dp, dl = p2 - p1, math.radians(b[1] - a[1])
    h = math.sin(dp / 2) ** 2 + math.cos(p1) * math.cos(p2) * math.sin(dl / 2) ** 2
    return 2 * r * math.asin(min(1.0, math.sqrt(h)))


def load_cities(limit=10):
    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, "..", "data", "bfc_cities.csv"), encoding="utf-8") as f:
        rows = list(csv.DictReader(f))[:limit]
    cols = [c for c in rows[0] if c not in ("name", "lat", "lon")]
    raw = [[float(r[c]) for c in cols] for r in rows]
    lo = [min(v[i] for v in raw) for i in range(len(cols))]
    hi = [max(v[i] for v in raw) for i in range(len(cols))]
    feats = [[(v[i] - lo[i]) / (hi[i] - lo[i]) for i in range(len(cols))] for v in raw]
    coords = [(float(r["lat"]), float(r["lon"])) for r in rows]
    return [r["name"] for r in rows], coords, feats


def location_probabilities(origin, eps, k, radius, coords, feats):
    dist = lambda i: math.dist(feats[origin], feats[i])
    others = [i for i in range(len(feats))
              if i != origin and haversine_km(coords[origin], coords[i]) <= radius]
    others.sort(key=lambda i: (dist(i), i))
    cand = [origin] + others[: k - 1]
    w = [math.exp(eps * (1 - dist(i)) - eps) for i in cand]
    s = sum(w)
    return cand, [x / s for x in w]


def sanitize_location(origin, eps, k, radius, coords, feats, rng):
    cand, probs = location_probabilities(origin, eps, k, radius, coords, feats)
    u, acc = rng.uniform(), 0.0
    for c, p in zip(cand, probs):
        acc += p
        if u < acc:
            return c
    return cand[-1]


def main():
    g = MT64(5489)
    first = [g.next() for _ in range(3)]
    for _ in range(9997):
        tenth_k = g.next()
    print("mt64 seed 5489 first:", first, "10000th:", tenth_k)
    print("stream_seed(42, 'thread_example') =", stream_seed(42, "thread_example"))

    print("temporal 323 days eps=0.25:",
          [sanitize_temporal(323, 0.25, MT64(s)) for s in range(1, 9)])
    print("temporal 40 years eps=1 stream(2020,'doc'):",
          sanitize_temporal(40, 1.0, MT64(stream_seed(2020, "doc"))))

    names, coords, feats = load_cities()
    cand, probs = location_probabilities(0, 1.0, 10, float("inf"), coords, feats)
    print("dijon eps=1 full support:", [(names[c], round(p, 12)) for c, p in zip(cand, probs)])
    print("dijon eps=1 picks seeds 1..8:",
          [sanitize_location(0, 1.0, 10, float("inf"), coords, feats, MT64(s))
           for s in range(1, 9)])
    cand, probs = location_probabilities(0, 0.25, 5, 100.0, coords, feats)
    print("dijon eps=0.25 k=5 100km:", [(names[c], round(p, 12)) for c, p in zip(cand, probs)])


if __name__ == "__main__":
    main()
