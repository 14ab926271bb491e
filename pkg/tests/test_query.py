import random

import pytest
from hypothesis import given, settings, strategies as st

from aspkernel.corpus import PI1, PI2, PI3, PI5, PI7
from aspkernel.engine import AnswerSet, enumerate_answer_sets
from aspkernel.query import NoAnswerSetsWarning, Verdict, answer_query, entails, holds
from aspkernel.random_programs import random_program, random_stratified_program
from aspkernel.syntax import Query, lit, parse_program


def test_holds():
    assert holds(AnswerSet(frozenset({lit("happy")})), lit("happy"))
    assert not holds(AnswerSet(frozenset({lit("happy")})), lit("sad"))
    assert holds(AnswerSet(frozenset({lit("b"), lit("-a")})), lit("-a"))


def test_entails():
    p3 = parse_program(PI3)
    assert entails(p3, lit("drinks"))
    assert not entails(p3, lit("happy"))
    assert entails(parse_program(PI5), lit("a"))


def test_entails_vacuous():
    assert entails(parse_program(PI2), lit("happy"))


@pytest.mark.parametrize("program, query, verdict", [
    (PI3, "?- drinks.", Verdict.YES),
    (PI3, "?- happy.", Verdict.UNKNOWN),
    (PI5, "?- b.", Verdict.NO),
    (PI7, "?- -a.", Verdict.YES),
    (PI7, "?- a.", Verdict.NO),
    (PI7, "?- b, not a.", Verdict.YES),
    (PI3, "?- drinks, not happy.", Verdict.UNKNOWN),
    (PI3, "?- happy, sad.", Verdict.NO),
    (PI1, "?- not happy, not sad.", Verdict.NO),
])
def test_answer_query(program, query, verdict):
    assert answer_query(parse_program(program), query) is verdict


def test_extended_falsity_needs_complement():
    # c is neither derived nor explicitly false
    p = parse_program("-a :- not a.\nb :- -a.\nc :- a.")
    assert answer_query(p, "?- c.") is Verdict.UNKNOWN
    assert answer_query(p, "?- not c.") is Verdict.YES


def test_no_answer_sets_is_vacuous_yes():
    with pytest.warns(NoAnswerSetsWarning):
        assert answer_query(parse_program(PI2), "?- happy.") is Verdict.YES


def test_exit_codes():
    assert [v.exit_code for v in (Verdict.YES, Verdict.NO, Verdict.UNKNOWN)] == [0, 1, 2]


def test_nonmonotonic_withdrawal():
    assert answer_query(parse_program(PI1), "?- happy.") is Verdict.UNKNOWN
    assert answer_query(parse_program(PI1 + "sad."), "?- happy.") is Verdict.NO


@given(st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_yes_iff_entailed(seed):
    rng = random.Random(seed)
    g = random_program(rng, n_atoms=4, n_rules=6)
    models = enumerate_answer_sets(g)
    if not models:
        return
    for a in sorted(g.base):
        l = lit(str(a))
        verdict = answer_query(g, Query((l,)), answer_sets=models)
        assert (verdict is Verdict.YES) == entails(g, l, answer_sets=models)


@given(st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_categorical_programs_never_unknown(seed):
    g = random_stratified_program(random.Random(seed), n_atoms=5, n_rules=8)
    for a in g.base:
        assert answer_query(g, Query((lit(str(a)),))) is not Verdict.UNKNOWN
