"""
Explicit negation and the inconsistent answer set
=================================================

``-a`` is a literal of its own. When a program derives both ``a`` and
``-a`` its single answer set becomes every literal over the base.
"""

from aspkernel import (InconsistentAnswerSetError, answer_query,
                       enumerate_answer_sets, ground_text)
from aspkernel.corpus import PI7

g = ground_text(PI7)
print("pi7:", *enumerate_answer_sets(g))
print("?- -a.", answer_query(g, "?- -a."))
print("?- a. ", answer_query(g, "?- a."))

# with explicit negation, a literal that is merely absent is not false
g2 = ground_text(PI7 + "c :- a.\n")
print("?- c. ", answer_query(g2, "?- c."))

###############################################################################
# Contradiction

bad = ground_text("a. -a. b :- not c.")
(model,) = enumerate_answer_sets(bad)
print(model, "consistent:", model.consistent)

try:
    enumerate_answer_sets(bad, forbid_inconsistent=True)
except InconsistentAnswerSetError as e:
    print("forbidden:", e)
