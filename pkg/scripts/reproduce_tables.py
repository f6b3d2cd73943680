"""Print the singular-point cases, the delta tables and the subgroup signatures for a range of n."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from superelliptic.curve_family import classify_case, compute_c
from superelliptic.group_algebra import ActionModel, GroupSpec, subgroup_signature
from superelliptic.rotation import delta_table


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 6
    max_c: int = 2
    json: bool = False


def singular_cases(cfg: Config) -> list[dict]:
    rows = []
    for n in range(1, cfg.n_max + 1):
        for a in range(1, 2**n + 1, 2):
            info = classify_case(n, a)
            rows.append({"n": n, "a": a, "case": info.case, "singular": list(info.singular_points)})
    return rows


def subgroup_lines(cfg: Config) -> list[dict]:
    out = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for c in range(1, cfg.max_c + 1):
            a = c * 2 ** (n - 2) - 1
            if a < 1 or compute_c(n, a) is None:
                continue
            action = ActionModel.for_curve(n, a)
            spec = action.spec
            for name, g in action.named_subgroups().items():
                res = subgroup_signature(action, spec.generated_subgroup([g]))
                out.append({
                    "n": n, "a": a, "c": c, "subgroup": name, "generator": g.label(),
                    "signature": str(res.signature), "fixed_points": res.fixed_points,
                })
    return out


def order_two(cfg: Config) -> list[dict]:
    return [
        {"n": n, "abelian": GroupSpec.abelian(n).order_two_tau2_exponents(),
         "semidirect": GroupSpec.semidirect(n).order_two_tau2_exponents()}
        for n in range(cfg.n_min, cfg.n_max + 1)
    ]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for field, default in asdict(Config()).items():
        kind = (lambda s: s.lower() in ("1", "true", "yes")) if isinstance(default, bool) else type(default)
        p.add_argument(f"--{field.replace('_', '-')}", type=kind, default=default)
    cfg = Config(**vars(p.parse_args()))
    report = {
        "config": asdict(cfg),
        "singular_cases": singular_cases(cfg),
        "delta_case1": [r.to_json() for r in delta_table(3, 1)],
        "delta_case4_n4_a3": [r.to_json() for r in delta_table(4, 4, 3)],
        "delta_case5_n3_a3": [r.to_json() for r in delta_table(3, 5, 3)],
        "subgroups": subgroup_lines(cfg),
        "order_two_tau1k_tau2": order_two(cfg),
    }
    if cfg.json:
        print(json.dumps(report, indent=2))
        return
    print("Singular-point cases")
    for r in report["singular_cases"]:
        print(f"  n={r['n']:<2} a={r['a']:<4} case {r['case']}  {' '.join(r['singular']) or '-'}")
    print("Subgroup actions")
    for r in report["subgroups"]:
        print(f"  n={r['n']} a={r['a']} c={r['c']} {r['subgroup']}=<{r['generator']}> {r['signature']} fixed={r['fixed_points']}")
    print("k with tau1^k tau2 of order 2")
    for r in report["order_two_tau1k_tau2"]:
        print(f"  n={r['n']} abelian {r['abelian']} semidirect {r['semidirect']}")


if __name__ == "__main__":
    main()
