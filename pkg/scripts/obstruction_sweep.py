"""Run the Möbius obstruction search over many (n, a) and flag unexpected factor sets."""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from superelliptic.conformal_check import obstruction_search
from superelliptic.curve_family import compute_c


@dataclass
class Config:
    n_max: int = 8
    max_c: int = 6


EXPECTED = ["lam^2 - 2*lam - 1", "lam^2 + 2*lam - 1"]


def sweep(cfg: Config) -> list[dict]:
    rows = []
    for n in range(3, cfg.n_max + 1):
        for c in range(1, cfg.max_c + 1):
            a = c * 2 ** (n - 2) - 1
            if compute_c(n, a) is None:
                continue
            rep = obstruction_search(n, a).to_json()
            rows.append({
                "n": n, "a": a, "c": c,
                "factors": rep["exceptional_factors"],
                "matches": rep["exceptional_factors"] == EXPECTED,
                "surviving_assignments": sum(1 for x in rep["assignments"] if x["exceptional_factors"]),
            })
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--max-c", type=int, default=Config.max_c)
    args = p.parse_args()
    rows = sweep(Config(args.n_max, args.max_c))
    print(json.dumps(rows, indent=2))
    bad = [r for r in rows if not r["matches"]]
    print(f"{len(rows)} parameter pairs, {len(bad)} with an unexpected factor set")


if __name__ == "__main__":
    main()
