"""
Search against brute force
==========================

The backtracking enumerator is compared to plain subset enumeration on
random programs.
"""

import random
import time
from collections import Counter

from aspkernel import brute_force_answer_sets, enumerate_answer_sets
from aspkernel.random_programs import random_program

rng = random.Random(1)
sizes = Counter()
start = time.perf_counter()
for _ in range(300):
    g = random_program(rng, rng.randint(1, 7), 12, choice_pairs=rng.randint(0, 3),
                       max_body=rng.choice([1, 2, 3]))
    fast = enumerate_answer_sets(g)
    assert fast == brute_force_answer_sets(g)
    sizes[len(fast)] += 1
print(f"300 programs agree ({time.perf_counter() - start:.1f}s)")
print("answer sets per program:", dict(sorted(sizes.items())))
