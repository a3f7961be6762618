"""paritygame: exact engine for the parity placement game.

Two players take turns occupying free points of an ordered domain; the game
ends after a fixed number of turns, and the payoff is the inversion parity of
the placement sequence. This package classifies any position exactly, produces
winning moves, verifies itself against brute-force search at desk scale, and
serves the equivalent table-top games for live play.
"""

from .classify import CaseLabel, classify
from .domain import (
    DEFAULT_BOUND,
    Address,
    Block,
    BlockKind,
    Domain,
    FeatureSet,
    Position,
    Run,
    apply_move,
    canonical_moves,
    features,
    finite,
    finite_position,
    normalize_domain,
    occupied_runs,
)
from .order import Parity, append_parity_delta, inversion_parity
from .sequence_game import DeltaMove, GapSequence, delta
from .verdicts import Player, Verdict, verdict_fold

__version__ = "0.1.0"

__all__ = [
    "Address",
    "Block",
    "BlockKind",
    "CaseLabel",
    "DEFAULT_BOUND",
    "DeltaMove",
    "Domain",
    "FeatureSet",
    "GapSequence",
    "Parity",
    "Player",
    "Position",
    "Run",
    "Verdict",
    "append_parity_delta",
    "apply_move",
    "canonical_moves",
    "classify",
    "delta",
    "features",
    "finite",
    "finite_position",
    "inversion_parity",
    "normalize_domain",
    "occupied_runs",
    "verdict_fold",
]
