"""
Stable models by hand and by search
===================================

Walk through the reduct on a two-rule program, then enumerate the answer
sets of every program in the bundled corpus.
"""

from aspkernel import (enumerate_answer_sets, ground, is_stable, lit,
                       minimal_model, parse_program, reduct)
from aspkernel.corpus import PI1, PROGRAMS

# happy and sad block each other
program = ground(parse_program(PI1))
print(program)

# guess {happy}: the rule for sad is deleted and `not sad` is erased
guess = frozenset({lit("happy")})
red = reduct(program, guess)
print("reduct w.r.t. {happy}:")
print(red)

# the least model of the reduct gives the guess back, so it is stable
print("least model:", sorted(map(str, minimal_model(red))))
print("stable:", is_stable(program, guess))

# guessing both fails: every rule is deleted and nothing is derived
both = frozenset({lit("happy"), lit("sad")})
print("{happy, sad} stable:", is_stable(program, both))

###############################################################################
# The whole corpus

for name, text in PROGRAMS.items():
    models = enumerate_answer_sets(ground(parse_program(text)))
    shown = " ".join(map(str, models)) or "(none)"
    print(f"{name}: {shown}")
