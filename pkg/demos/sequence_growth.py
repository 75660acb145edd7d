"""Walk the sequence engine: values, growth envelope, membership windows.

Run:  python3 demos/sequence_growth.py [n_max]
"""

import sys

from triboverify.constants import verify_growth
from triboverify.tribonacci import index_window, is_tribonacci, trib, trib_fast


def main() -> None:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 25

    print("first values:")
    print(" ", ", ".join(str(trib(n)) for n in range(n_max + 1)))

    n = 10 * n_max
    assert trib_fast(n) == trib(n)
    print(f"\nfast doubling agrees with the table at n={n}:")
    print(f"  T_{n} = {trib_fast(n)}")

    rep = verify_growth(2 * n_max)
    print(f"\ngrowth envelope alpha^(n-3) <= T_n <= alpha^(n-2) "
          f"for 2 <= n <= {rep.n_max}: "
          f"{'holds' if rep.all_ok else rep.failures}")

    print("\nmembership probes:")
    for v in (81, 82, 66012, trib(100)):
        idx = is_tribonacci(v)
        verdict = f"T_{idx}" if idx is not None else "not in the sequence"
        print(f"  {v} -> {verdict}")

    v = trib(60) - 1
    lo, hi = index_window(v)
    print(f"\nindex window for {v}: [{lo}, {hi}] "
          f"(certified bracket; membership -> {is_tribonacci(v)})")


if __name__ == "__main__":
    main()
