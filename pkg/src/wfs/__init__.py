"""Well-founded semantics of finite propositional normal logic programs.

Three alternating-fixpoint solvers share one result type:

>>> from wfs import parse, solve
>>> result, stats = solve(parse("a :- not b. b :- b."), "topdown")
>>> result.named()
{'true': ['a'], 'false': ['b'], 'unknown': []}
"""

from .core import NotLp1Error, Program, ProgramBuilder, Rule, WfsResult, atoms_of, is_lp1
from .horn import DerivationEngine, HornProgram, least_model
from .reducts import ShrinkingProgram, gl, h_reduct, op_A, op_B, reduct_m, restrict
from .solver import SolveStats, delta_w_full, delta_w_topdown, solve, solve_alg2, solve_alg3, solve_vg
from .textio import ParseError, format_program, parse, serialize_result
from .topdown import false_subset

__all__ = [
    "DerivationEngine", "HornProgram", "NotLp1Error", "ParseError", "Program", "ProgramBuilder",
    "Rule", "ShrinkingProgram", "SolveStats", "WfsResult", "atoms_of", "delta_w_full",
    "delta_w_topdown", "false_subset", "format_program", "gl", "h_reduct", "is_lp1",
    "least_model", "op_A", "op_B", "parse", "reduct_m", "restrict", "serialize_result", "solve",
    "solve_alg2", "solve_alg3", "solve_vg",
]
