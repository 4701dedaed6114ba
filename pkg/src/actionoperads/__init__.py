"""Computing with action operads: concrete group families (symmetric,
braid, cactus, trivial) carrying block-sum and block-diagonal structure,
machine verification of the laws tying them together, the categorical
Borel construction on finite categories, clubs, multicategories with
group actions, and presentation checking."""

from .core import (
    ActionOperad,
    AxiomCheckConfig,
    AxiomReport,
    OperadElement,
    check_axioms,
    get_operad,
    symmetric_operad,
    trivial_operad,
)
from .perm import Perm, block_perm, block_sum, compose, identity, inverse, parse_perm
from .rewrite import EqResult, RelationSystem, Word, equal, free_reduce, replay_path

__all__ = [
    "ActionOperad",
    "AxiomCheckConfig",
    "AxiomReport",
    "EqResult",
    "OperadElement",
    "Perm",
    "RelationSystem",
    "Word",
    "block_perm",
    "block_sum",
    "check_axioms",
    "compose",
    "equal",
    "free_reduce",
    "get_operad",
    "identity",
    "inverse",
    "parse_perm",
    "replay_path",
    "symmetric_operad",
    "trivial_operad",
]
