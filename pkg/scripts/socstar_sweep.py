"""Sweep seeded PLP types and report, per n, where soc(I^(k+1)) first lies in I soc(I^k).

Writes one JSON line per type to stdout.
"""
import argparse
import json
from dataclasses import asdict, dataclass

from soclekit.corpora import random_feasible_types
from soclekit.polymatroid import plp_gens, plp_socstar_nonzero
from soclekit.socle import socle_basis, socstar_containment_check


@dataclass
class SweepConfig:
    count: int = 40
    seed: int = 1
    n_max: int = 4
    entry_max: int = 3
    k_max: int = 5


def sweep(cfg: SweepConfig):
    for t in random_feasible_types(cfg.count, cfg.seed, cfg.n_max, cfg.entry_max, n_min=2):
        I = plp_gens(t)
        first = next((m for m in range(1, cfg.k_max + 2) if socle_basis(I, m)), None)
        holds = [k for k in range(1, cfg.k_max + 1) if socstar_containment_check(I, k)]
        yield {
            "type": t.to_dict(),
            "n": t.n,
            "socstarNonzero": plp_socstar_nonzero(t),
            "firstSoclePower": first,
            "containmentHoldsAt": holds,
            "holdsFromNMinus1": all(k in holds for k in range(max(1, t.n - 1), cfg.k_max + 1)),
        }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    defaults = SweepConfig()
    for name, value in asdict(defaults).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=value)
    cfg = SweepConfig(**{k: v for k, v in vars(parser.parse_args()).items()})
    for row in sweep(cfg):
        print(json.dumps(row, sort_keys=True))


if __name__ == "__main__":
    main()
