"""Run the decision procedure over every smooth element of the simply-laced
types up to a rank bound and tabulate certificate kinds."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from schubert_spherical import decide_spherical, enumerate_group, format_element, root_system
from schubert_spherical.smooth import is_smooth


@dataclass
class Config:
    max_rank: int = 5
    families: str = "AD"


def main(cfg: Config):
    for fam in cfg.families:
        lo = {"A": 1, "D": 4, "E": 6}[fam]
        for n in range(lo, cfg.max_rank + 1):
            S = root_system(fam, n)
            t = time.perf_counter()
            kinds, bad, smooth = Counter(), [], 0
            for w in enumerate_group(S):
                if not is_smooth(w).smooth:
                    continue
                smooth += 1
                cert = decide_spherical(S, w)
                kinds[cert.kind] += 1
                if cert.verdict != "spherical":
                    bad.append(format_element(w))
            summary = ", ".join(f"{k} {v}" for k, v in sorted(kinds.items()))
            print(f"{S.ctype}: {smooth} smooth, {len(bad)} not certified ({time.perf_counter() - t:.1f}s): {summary}")
            if bad:
                print(f"  witnesses: {bad[:5]}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--families", default="AD", help="subset of ADE")
    main(Config(**vars(p.parse_args())))
