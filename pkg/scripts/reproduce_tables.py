#!/usr/bin/env python3
"""Print the classification tables for the worked example domains.

Each domain is (type, grading indices, highest weight or None for the adjoint
representation).  Output is the same text the CLI prints, one block per domain,
optionally with Deligne diamonds.
"""
import argparse
from dataclasses import dataclass, field

from hodge_sl2.cli import build_report, render_text
from hodge_sl2.config import RunConfig
from hodge_sl2.sl2_classifier import MTDomainSpec

EXAMPLES = [
    ("B2", (1,), (1, 0)), ("B2", (2,), (1, 0)), ("B2", (1, 2), (1, 0)),
    ("A2", (1, 2), None), ("G2", (1,), (1, 0)), ("G2", (2,), (1, 0)), ("G2", (1, 2), (1, 0)),
    ("C3", (1, 3), (1, 0, 0)), ("C3", (2, 3), (1, 0, 0)), ("C3", (1, 2, 3), (1, 0, 0)),
    ("D4", (2,), (1, 0, 0, 0)), ("B4", (3,), (1, 0, 0, 0)), ("F4", (1,), (0, 0, 0, 1)),
]


@dataclass
class TablesConfig:
    run: RunConfig = field(default_factory=RunConfig)
    diamonds: bool = False
    only: str = ""   # restrict to one type, e.g. "C3"


def main(cfg: TablesConfig):
    for t, I, lam in EXAMPLES:
        if cfg.only and t != cfg.only.upper():
            continue
        spec = MTDomainSpec.from_indices(t, I)
        rep = build_report(spec, cfg.run, lam=lam, diamonds=cfg.diamonds)
        print(render_text(rep))
        print()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--diamonds", action="store_true")
    ap.add_argument("--only", default="")
    a = ap.parse_args()
    main(TablesConfig(diamonds=a.diamonds, only=a.only))
