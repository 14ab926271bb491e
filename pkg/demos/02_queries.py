"""
Asking questions of a program
=============================

Queries get one of three answers. Adding a fact can turn ``unknown`` into
``no``: conclusions are withdrawn when the program grows.
"""

from aspkernel import Verdict, answer_query, entails, lit, parse_program
from aspkernel.corpus import PI1, PI3, PI5

drinker = parse_program(PI3)
for q in ["?- drinks.", "?- happy.", "?- happy, sad.", "?- drinks, not sad."]:
    print(f"{q:22} {answer_query(drinker, q)}")

print("entails drinks:", entails(drinker, lit("drinks")))
print("pi5, ?- b.:", answer_query(parse_program(PI5), "?- b."))

###############################################################################
# Nonmonotonicity

before = answer_query(parse_program(PI1), "?- happy.")
after = answer_query(parse_program(PI1 + "sad.\n"), "?- happy.")
print(f"happy before adding `sad.`: {before}; after: {after}")
assert (before, after) == (Verdict.UNKNOWN, Verdict.NO)
