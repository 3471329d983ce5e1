"""Run-time limits shared by the CLI and the scripts."""
from __future__ import annotations

from dataclasses import dataclass, field

from .rep_weights import REP_DIM_CAP_DEFAULT
from .root_system import weyl_cap


@dataclass
class RunConfig:
    weyl_cap: int = field(default_factory=weyl_cap)  # honours HODGE_SL2_WEYL_CAP
    rep_cap: int = REP_DIM_CAP_DEFAULT
    include_trivial: bool = False
