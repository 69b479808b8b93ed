#!/usr/bin/env python3
# Copyright 2026 The morphoseg Authors
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

"""Arbitrary-precision reference for the two-part code lengths.

Computes the corpus and lexicon costs straight from their definitions with
mpmath at 50 significant digits. The C++ tests freeze the values printed
here; run with --check to compare against the frozen table.
"""

import sys
from collections import Counter

import mpmath

mpmath.mp.dps = 50

END = "\0end"


def corpus_cost(counts):
    n = sum(counts.values())
    return -sum(c * mpmath.log(mpmath.mpf(c) / n, 2) for c in counts.values())


def lexicon_cost(counts):
    chars = Counter()
    for morph in counts:
        chars.update(morph)
        chars[END] += 1
    total = sum(chars.values())
    return -sum(c * mpmath.log(mpmath.mpf(c) / total, 2) for c in chars.values())


FIXTURES = {
    "ab:1": {"ab": 1},
    "a:1,b:1": {"a": 1, "b": 1},
    "ma:5,phaning:3": {"ma": 5, "phaning": 3},
}

FROZEN = {
    "ab:1": ("0", "4.7548875021634685"),
    "a:1,b:1": ("2", "6"),
    "ma:5,phaning:3": ("7.6354720233997197", "32.05374780501027"),
}


def main():
    ok = True
    for name, counts in FIXTURES.items():
        c = corpus_cost(counts)
        l = lexicon_cost(counts)
        print(f"{name}\tcorpus={mpmath.nstr(c, 17)}\tlexicon={mpmath.nstr(l, 17)}"
              f"\ttotal={mpmath.nstr(c + l, 17)}")
        if "--check" in sys.argv:
            fc, fl = FROZEN[name]
            if abs(c - mpmath.mpf(fc)) > 1e-12 or abs(l - mpmath.mpf(fl)) > 1e-12:
                print(f"MISMATCH {name}", file=sys.stderr)
                ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
