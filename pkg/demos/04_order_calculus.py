"""The order calculus: regular forms certify hyperbolicity.

Whether a value-sharing curve can carry a nonconstant holomorphic map
from the plane comes down to the existence of regular Wronskian forms
on it. The construction is purely combinatorial in the critical-point
multiplicities and the value pairing, so verdicts can be enumerated,
certified by explicit order ledgers, and replayed at random sample
orders.

Run:  python3 demos/04_order_calculus.py
"""

import random
from collections import Counter

from uniqpoly import (
    Configuration,
    enumerate_configurations,
    hyperbolicity_verdict,
    replay_verdict,
)


def main() -> None:
    # one configuration in detail: two paired critical points with a
    # multiplicity gap of 3
    cfg = Configuration("scaled", (4, 1), ((0, 1), (1, 0)))
    hv = hyperbolicity_verdict(cfg)
    print(f"configuration: {cfg.kind} mults={cfg.mults} pairing={cfg.pairing}")
    print(f"verdict: {hv.verdict}  (route: {hv.route})")
    for fv in hv.forms:
        spec = fv.form
        print(f"  form on {spec.wronskian} pencil:"
              f" numerator {dict(spec.num)},"
              f" denominator {dict(spec.den)},"
              f" regular={fv.regular}")
    if hv.independence:
        print(f"  independence: {hv.independence}")
    print(f"  assumptions: {list(hv.assumptions)}")

    rng = random.Random(7)
    print(f"  replay at random orders: {replay_verdict(hv, rng)}")

    # census of all verdicts for small configurations
    print("\nverdict counts for every configuration type with n <= 10:")
    counts: Counter = Counter()
    for c in enumerate_configurations(10):
        counts[(c.kind, hyperbolicity_verdict(c).verdict)] += 1
    for (kind, verdict), k in sorted(counts.items()):
        print(f"  {kind:7s} {verdict:10s} {k}")

    # the one scaled shape with no grant at all: three simple points
    # chained into a cycle, which is exactly the orbit-quartic shape
    cyc = Configuration("scaled", (1, 1, 1), ((0, 1), (1, 2), (2, 0)))
    print("\nthree simple points in a value cycle:",
          hyperbolicity_verdict(cyc).verdict)
    print("matching the genus-0 scaled curve of the orbit quartic.")


if __name__ == "__main__":
    main()
