"""Survey of edge switching on random hypergraphs.

Tallies how i_3, i_4 and f move across a switch and how often each equality
case coincides with isomorphism. i_4 is only recorded; nothing is asserted.

    python3 scripts/switching_survey.py --samples 2000 --seed 20261016
"""
from __future__ import annotations

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from cover_switch.counting import count_independent_sets
from cover_switch.switching import default_ordering, edge_switch
from cover_switch.verify import random_hypergraph


@dataclass
class SurveyConfig:
    samples: int = 2000
    seed: int = 20261016
    max_vertices: int = 9
    max_edges: int = 7
    max_edge_size: int = 4


def _sign(a: int, b: int) -> str:
    return "up" if b > a else "down" if b < a else "equal"


def survey(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    tally: dict[str, Counter] = {k: Counter() for k in ("i3", "i4", "f", "i3_equal", "f_equal")}
    switches = 0
    for _ in range(cfg.samples):
        h = random_hypergraph(rng, cfg.max_vertices, cfg.max_edges, cfg.max_edge_size)
        for e in h.edges:
            shuffled = list(e)
            rng.shuffle(shuffled)
            for order in (default_ordering(h, e), tuple(shuffled)):
                out = edge_switch(h, order)
                switches += 1
                i4 = (count_independent_sets(h, 4), count_independent_sets(out.result, 4))
                tally["i3"][_sign(out.i3_before, out.i3_after)] += 1
                tally["i4"][_sign(*i4)] += 1
                tally["f"][_sign(out.f_before, out.f_after)] += 1
                iso = "isomorphic" if not out.changed else "not_isomorphic"
                if out.i3_before == out.i3_after:
                    tally["i3_equal"][iso] += 1
                if out.f_before == out.f_after:
                    positive = "f>0" if out.f_before else "f=0"
                    tally["f_equal"][f"{iso},{positive}"] += 1
    return {"config": asdict(cfg), "switches": switches,
            **{k: dict(sorted(v.items())) for k, v in tally.items()}}


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(SurveyConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=default)
    cfg = SurveyConfig(**vars(ap.parse_args(argv)))
    print(json.dumps(survey(cfg), indent=2))


if __name__ == "__main__":
    main()
