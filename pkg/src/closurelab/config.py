"""Caps and suite settings.  CLOSURELAB_CAPS="oracle_n=24,superset_bits=22" overrides caps."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace

from .errors import InvalidArgument

ENV_VAR = "CLOSURELAB_CAPS"


@dataclass(frozen=True)
class Caps:
    oracle_n: int = 22          # max host size for brute-force enumeration
    superset_bits: int = 20     # max |V(g) \ S| for the maximality superset search
    clique_n: int = 60          # max host size in the random clique-bound suite
    alpha_n: int = 40           # exact independence number only up to this size
    tree_sets: int = 100000     # max number of subtree-form sets to materialise
    seeds: int = 1_000_000      # max number of fast-enumeration seeds

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise InvalidArgument(f"cap {f.name} must be positive")


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise InvalidArgument(f"bad {ENV_VAR} entry {item!r}; known caps: {sorted(known)}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise InvalidArgument(f"cap {key} needs an integer, got {value!r}") from None
    return replace(base, **updates)


def current_caps() -> Caps:
    return parse_caps(os.environ.get(ENV_VAR, ""))


@dataclass(frozen=True)
class SuiteConfig:
    caps: Caps = field(default_factory=current_caps)
    seed: int = 0
    instances: int = 100
    cases: tuple = ("2a", "2b", "2c", "multi-bad")
    k_range: tuple = (3, 5)
    output: str | None = None
