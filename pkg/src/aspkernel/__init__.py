"""Answer set programming kernel: parsing, grounding, stable models,
three-valued queries and program analysis."""

from .analysis import (Justification, LevelMapping, NotAnAnswerSetError,
                       check_level_mapping, is_categorical, justify, stratify,
                       support_violations, supported_only_by, supports,
                       verify_supportedness)
from .engine import (AnswerSet, InconsistentAnswerSetError, NotPositiveError,
                     ResourceLimitExceeded, UniverseTooLarge,
                     brute_force_answer_sets, enumerate_answer_sets,
                     is_consistent, is_stable, minimal_model, reduct,
                     saturate_inconsistent, tp_fixpoint, tp_step)
from .grounder import GroundProgram, ground, ground_text, herbrand_base
from .query import Verdict, answer_query, entails, holds
from .syntax import (Atom, Literal, ParseError, Program, Query, Rule, Term,
                     lit, parse_literal, parse_literal_set, parse_program,
                     parse_query, print_program)

__version__ = "0.1.0"
