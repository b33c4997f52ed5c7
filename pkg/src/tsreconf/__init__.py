"""Token sliding reconfiguration of independent sets in interval graphs."""

from tsreconf.interval_model import GraphError, Interval, IntervalGraph, build_graph
from tsreconf.kernels import BACKEND
from tsreconf.pushing import push_apart, push_token_left, push_token_right
from tsreconf.reconfiguration import (
    ConfigurationError,
    Move,
    MoveError,
    ValidationReport,
    apply_move,
    apply_prefix,
    make_configuration,
    reverse_sequence,
    splice,
    validate_sequence,
)
from tsreconf.solver import (
    Decision,
    InvariantViolation,
    canonicalize,
    decide_and_construct,
    reconfigure_to_extreme,
)

__version__ = "0.1.0"
