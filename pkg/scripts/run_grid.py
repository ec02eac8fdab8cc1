"""Exhaustive extremal grids: max i_t over K_n-covered classes and min k_t against the CL graph.

    python3 scripts/run_grid.py --out grid.jsonl --N-max 8 --jobs 4
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from cover_switch.verify import verify_cl, verify_main


@dataclass
class GridConfig:
    n_values: tuple[int, ...] = (1, 2, 3, 4)
    t_values: tuple[int, ...] = (3, 4)
    N_max: int = 7
    # N = 8 only for the larger n, where the class lists are already filtered down
    N8_for_n: tuple[int, ...] = (3, 4)
    cl_n_values: tuple[int, ...] = (2, 3)
    jobs: int = 1


def cells(cfg: GridConfig):
    for n in cfg.n_values:
        for t in cfg.t_values:
            top = cfg.N_max + (cfg.N_max >= 7 and n in cfg.N8_for_n)
            for N in range(n, top + 1):
                yield "verify-main", n, t, N
    for n in cfg.cl_n_values:
        for t in range(2, n + 1):
            for N in range(n, min(cfg.N_max, 7) + 1):
                yield "verify-cl", n, t, N


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N-max", dest="N_max", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="JSONL output path (default stdout)")
    args = ap.parse_args(argv)
    cfg = GridConfig(N_max=args.N_max, jobs=args.jobs)
    out = open(args.out, "w") if args.out else sys.stdout
    failed = 0
    print(f"# config {json.dumps(asdict(cfg))}", file=sys.stderr)
    for cmd, n, t, N in cells(cfg):
        fn = verify_main if cmd == "verify-main" else verify_cl
        rep = fn(n, t, N, jobs=cfg.jobs)
        failed += not rep.passed
        out.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
        print(rep.summary(), file=sys.stderr)
    if out is not sys.stdout:
        out.close()
    print(f"# {failed} failing cells", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
