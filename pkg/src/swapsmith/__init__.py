"""Make loopy multigraphs simple with admissible double edge swaps."""

from importlib import resources

from .formats import FormatError, format_graph, format_trace, parse_graph, parse_trace, read_graph, read_trace
from .game import (
    GameRecord,
    GameSolver,
    StrategyAssertionFailed,
    make_devil,
    play_game,
    play_loopfree_game,
    play_loopy_game,
    solve_game_exhaustive,
)
from .graphicality import (
    DegreeSequence,
    InfeasibleDegrees,
    NotGraphical,
    erdos_gallai,
    realize_degrees,
    realize_loopfree_multigraph,
    realize_simple,
)
from .multigraph import (
    IllegalSwap,
    LoopyMultigraph,
    Swap,
    SwapTrace,
    apply_swap,
    is_admissible,
    replay,
    swap_is_admissible,
)
from .oracle import admissible_neighbors, enumerate_graphs, min_admissible_swaps, sweep_verify
from .sampling import (
    BudgetExhausted,
    empirical_tv,
    sample_configuration_model,
    sample_rejection,
    sample_switched,
)
from .strategies import angel_target_step, cycle_swap, descent_step, eliminate_loops, simplify, total_distance

__version__ = "0.1.0"


def data_path(name: str):
    """Path to a bundled data file such as ``two_swap.graph``."""
    return resources.files(__name__).joinpath("data", name)


def load_graph(name: str) -> LoopyMultigraph:
    return parse_graph(data_path(name).read_text(encoding="utf-8"))


def load_trace(name: str) -> SwapTrace:
    return parse_trace(data_path(name).read_text(encoding="utf-8"))


__all__ = [
    "BudgetExhausted", "DegreeSequence", "FormatError", "GameRecord", "GameSolver", "IllegalSwap",
    "InfeasibleDegrees", "LoopyMultigraph", "NotGraphical", "StrategyAssertionFailed", "Swap", "SwapTrace",
    "admissible_neighbors", "angel_target_step", "apply_swap", "cycle_swap", "data_path", "descent_step",
    "eliminate_loops", "empirical_tv", "enumerate_graphs", "erdos_gallai", "format_graph", "format_trace",
    "is_admissible", "load_graph", "load_trace", "make_devil", "min_admissible_swaps", "parse_graph",
    "parse_trace", "play_game", "play_loopfree_game", "play_loopy_game", "read_graph", "read_trace",
    "realize_degrees", "realize_loopfree_multigraph", "realize_simple", "replay", "sample_configuration_model",
    "sample_rejection", "sample_switched", "simplify", "solve_game_exhaustive", "swap_is_admissible",
    "sweep_verify", "total_distance",
]
