"""
Stratification, support and justification
==========================================
"""

from aspkernel import (enumerate_answer_sets, ground_text, is_categorical, justify,
                       lit, stratify, support_violations, supported_only_by)
from aspkernel.corpus import PI1, PI3, PI7

# a level mapping exists when no cycle passes through `not`
g = ground_text("a. b :- a. c :- not a.")
print({str(l): n for l, n in stratify(g).items()})
print("pi1 stratified:", stratify(ground_text(PI1)) is not None)
print("pi1 categorical:", is_categorical(ground_text(PI1)))

###############################################################################
# Why is a literal in an answer set?

g3 = ground_text(PI3)
for model in enumerate_answer_sets(g3):
    print(model)
    for l in model:
        j = justify(g3, model, l)
        print("   ", l, "<=", j.rule)

print("only support for b in pi7:", supported_only_by(ground_text(PI7), lit("b")))

# a non-answer set fails the support check, and says where
print(support_violations(ground_text(PI1), {lit("happy"), lit("sad")}))
