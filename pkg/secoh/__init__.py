# Problem documents, runs and the command line

from secoh.problem import ProblemSpec, parse_problem
from secoh.runner import all_passed, run

__all__ = ["ProblemSpec", "all_passed", "parse_problem", "run"]
