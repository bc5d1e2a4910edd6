"""Combinatorial invariants of tunnel number one knot tunnels."""
from .bounds import (
    additive_iteration, cheapest_descent, fibonacci_upper, lower_bound, max_bridge,
    min_bridge_at_depth, semisimple_upper, torus_min_bridge_at_depth, upper_bound,
)
from .corridor import (
    SString, TunnelClass, build_corridor, classify, count_minimal_oracle, depth,
    depth_profile, first_regular_index, parse_sstring,
)
from .giantsteps import Config, count_minimal_fast, decompose
from .torus import (
    cabling_trace, letter_word, normalize, s_string, torus_bridge_number, torus_classify,
    torus_depth,
)

__version__ = "0.1.0"
