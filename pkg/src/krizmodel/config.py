"""Run configuration shared by the experiment scripts."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field, fields

from .ring import load_ring


@dataclass
class RunConfig:
    rings: list = field(default_factory=lambda: ["cp:1"])
    n_min: int = 2
    n_max: int = 5
    seed: int = 0

    def load_rings(self):
        return [load_ring(r) for r in self.rings]

    @classmethod
    def from_argv(cls, argv=None, **defaults):
        base = cls(**defaults)
        parser = argparse.ArgumentParser()
        for f in fields(cls):
            val = getattr(base, f.name)
            if isinstance(val, list):
                parser.add_argument(f"--{f.name.replace('_', '-')}", nargs="+", default=val)
            else:
                parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(val), default=val)
        return cls(**vars(parser.parse_args(argv)))
