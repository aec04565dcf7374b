"""Command-line front end: problem files, builtin problems, reports."""
from .main import main, run
from .report import CheckResult, Report
from .specfile import Problem, load_spec, parse_spec

__all__ = ["CheckResult", "Problem", "Report", "load_spec", "main", "parse_spec", "run"]
