"""Small example programs used throughout the tests and demos."""

PI1 = """\
happy :- not sad.
sad :- not happy.
"""

PI2 = """\
happy :- not sad.
sad :- not soandso.
soandso :- not happy.
"""

PI3 = """\
drinks :- happy.
drinks :- sad.
happy :- not sad.
sad :- not happy.
"""

PI4 = """\
soandso :- not sad, not happy.
happy :- not sad, not soandso.
sad :- not happy, not soandso.
"""

PI5 = """\
f :- not f, not a.
a :- not b.
b :- not a.
"""

PI6 = """\
f :- not f, a.
a :- not b.
b :- not a.
"""

PI7 = """\
-a :- not a.
b :- -a.
"""

PIX = """\
f :- b.
c :- a.
a :- d.
d :- not b.
b :- not a.
"""

PROGRAMS = {
    "pi1": PI1, "pi2": PI2, "pi3": PI3, "pi4": PI4,
    "pi5": PI5, "pi6": PI6, "pi7": PI7, "pix": PIX,
}
