"""Hunt for triples u < v < w with uv+1, uw+1, vw+1 all in the sequence.

Two strategies must agree: inversion over index triples, and value-side
brute force.  On the real sequence both come back empty; a planted triple
in a fake table shows the machinery actually finds things.

Run:  python3 demos/triple_search.py [z_max] [w_max]
"""

import sys
import time

from triboverify.tribonacci import trib
from triboverify.triples import brute_force, search, uvw_from_xyz


class PlantedTable:
    """Fake sequence containing the triple (1, 2, 3) at indices (5, 6, 7)."""

    VALS = [0, 0, 1, 1, 2, 3, 4, 7, 13, 24, 44, 81, 149]

    def value(self, n):
        return self.VALS[n]

    def values_upto(self, bound):
        return [(n, v) for n, v in enumerate(self.VALS) if v <= bound]

    def first_index(self, value):
        for n, v in enumerate(self.VALS):
            if v == value:
                return n
        return None


def main() -> None:
    z_max = int(sys.argv[1]) if len(sys.argv) > 1 else 60
    w_max = int(sys.argv[2]) if len(sys.argv) > 2 else 2000

    print("inversion at small index triples:")
    for x, y, z in ((5, 6, 7), (5, 7, 8), (6, 7, 9)):
        tx, ty, tz = trib(x) - 1, trib(y) - 1, trib(z) - 1
        got = uvw_from_xyz(x, y, z)
        print(f"  ({x},{y},{z}): u^2 = {tx * ty}/{tz} -> {got}")

    t0 = time.time()
    plain = search(z_max)
    pruned = search(z_max, use_gcd_prune=True)
    print(f"\nindex search to z = {z_max}: {len(plain)} found "
          f"({time.time() - t0:.2f}s); gcd prune agrees: {plain == pruned}")

    t0 = time.time()
    brute = brute_force(w_max)
    print(f"value search to w = {w_max}: {len(brute)} found "
          f"({time.time() - t0:.2f}s)")

    print("\nsame engines on a table with a planted solution:")
    pt = PlantedTable()
    print(f"  index route: {search(12, table=pt)}")
    print(f"  value route: {brute_force(10, table=pt)}")


if __name__ == "__main__":
    main()
