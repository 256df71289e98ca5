#!/usr/bin/env python3
"""Rediscover the small structures separating the weak closure notions
from the plain ones.

Sweeps Z_n for n up to 16 and prints, for each separating predicate, the
witnesses found: ideals that are weakly (m,n)-closed but not closed,
ideals whose weak closedness is not monotone in m, and weakly
(2,1)-closed ideals that are not weakly radical.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from closure_lab import SEARCH_PREDICATES, search_counterexamples
from closure_lab.families import make_family


def main() -> int:
    family = make_family(
        cyclic_moduli=tuple(range(2, 17)),
        product_moduli=(),
        idealization_max=1,
        principal_primes=(),
        principal_max_exponent=2,
        m_max=3,
    )
    for predicate in SEARCH_PREDICATES:
        witnesses = search_counterexamples(predicate, family)
        print(f"== {predicate}: {len(witnesses)} witness(es)")
        for witness in witnesses:
            print(f"   {witness}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
