"""
Running the verification suites
===============================

Each suite draws seeded instances, checks one statement against an
independent exact computation, and classifies every instance.
"""

from collections import Counter

from hprod.verify import SUITES, verify

for name in ("weichsel", "fiber-family", "kappa-circ", "domination"):
    reports = verify(name, range(1, 101))
    print(f"{name:14s}", dict(Counter(r.status for r in reports)))

# a violation comes with everything needed to replay it
(bad,) = verify("domination", [58])
print(bad.status, bad.details["problems"])
print(bad.details["instance"])
print(len(SUITES), "suites available")
