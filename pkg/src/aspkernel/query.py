"""Three-valued query answering over all answer sets of a program."""
from __future__ import annotations

import enum
import warnings
from typing import Iterable, Optional, Sequence, Union

from .engine import AnswerSet, enumerate_answer_sets
from .grounder import GroundProgram, as_ground
from .syntax import Literal, Program, Query, parse_query

AnyProgram = Union[Program, GroundProgram]


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @property
    def exit_code(self) -> int:
        return {"yes": 0, "no": 1, "unknown": 2}[self.value]

    def __str__(self) -> str:
        return self.value


class NoAnswerSetsWarning(UserWarning):
    pass


def holds(s: AnswerSet, l: Literal) -> bool:
    return l in s.literals


def _models(p: AnyProgram, answer_sets: Optional[Sequence[AnswerSet]],
            node_cap: Optional[int]) -> Sequence[AnswerSet]:
    if answer_sets is not None:
        return answer_sets
    return enumerate_answer_sets(as_ground(p), node_cap=node_cap)


def entails(p: AnyProgram, l: Literal, *,
            answer_sets: Optional[Sequence[AnswerSet]] = None,
            node_cap: Optional[int] = None) -> bool:
    """True when ``l`` belongs to every answer set (vacuously so when none)."""
    return all(holds(s, l) for s in _models(p, answer_sets, node_cap))


def _value(s: AnswerSet, q: Query, extended: bool) -> Optional[bool]:
    # True / False / None (neither the literal nor its complement is in s)
    values = []
    for l in q.pos:
        if l in s.literals:
            values.append(True)
        elif not extended or l.complement() in s.literals:
            values.append(False)
        else:
            values.append(None)
    values.extend(l not in s.literals for l in q.neg)
    if False in values:
        return False
    if None in values:
        return None
    return True


def answer_query(p: AnyProgram, q: Union[Query, str], *,
                 answer_sets: Optional[Sequence[AnswerSet]] = None,
                 node_cap: Optional[int] = None) -> Verdict:
    """``yes`` if the query is true in every answer set, ``no`` if it is false
    in every one, ``unknown`` otherwise.

    In a program without explicit negation a literal missing from an answer
    set counts as false. With explicit negation, falsity of ``l`` requires its
    complement in the set. A ``not l`` conjunct is plain non-membership.
    """
    if isinstance(q, str):
        q = parse_query(q)
    g = as_ground(p)
    models = _models(g, answer_sets, node_cap)
    if not models:
        warnings.warn("no answer sets: every query is entailed vacuously",
                      NoAnswerSetsWarning, stacklevel=2)
        return Verdict.YES
    values = [_value(s, q, g.is_extended) for s in models]
    if all(v is True for v in values):
        return Verdict.YES
    if all(v is False for v in values):
        return Verdict.NO
    return Verdict.UNKNOWN


def answer_all(p: AnyProgram, queries: Iterable[Union[Query, str]]) -> list[Verdict]:
    g = as_ground(p)
    models = enumerate_answer_sets(g)
    return [answer_query(g, q, answer_sets=models) for q in queries]
