"""Inspect the E-type catalogue elements w_kl = v_l u_k: lengths, supports,
rational smoothness and sphericity certificates."""

import argparse
import time
from dataclasses import dataclass

from schubert_spherical import config, decide_spherical, root_system
from schubert_spherical.bp import EKLIndex, ekl_catalogue, ekl_parts
from schubert_spherical.errors import ResourceCapError
from schubert_spherical.smooth import is_rationally_smooth
from schubert_spherical.weyl import support


@dataclass
class Config:
    rank: int = 6
    decide: bool = False
    interval_cap: int = 10**7


def main(cfg: Config):
    config.LIMITS.interval_cap = cfg.interval_cap
    S = root_system("E", cfg.rank)
    for (k, l) in sorted(ekl_catalogue(S)):
        p = ekl_parts(S, EKLIndex(k, l))
        sup = sorted(i + 1 for i in support(p.w))
        inside = support(p.w) <= EKLIndex.J(k)
        print(f"w_{k}{l}: length {p.w.length} = {p.v_l.length} + {p.u_k.length}, support {sup}, inside J_{k}: {inside}")
        t = time.perf_counter()
        try:
            rs = is_rationally_smooth(p.w)
            print(f"  rationally smooth: {rs} ({time.perf_counter() - t:.1f}s)")
        except ResourceCapError as exc:
            print(f"  rational smoothness skipped: {exc}")
        if cfg.decide:
            t = time.perf_counter()
            cert = decide_spherical(S, p.w)
            kinds = " > ".join(c.kind for c in cert.chain())
            print(f"  {cert.verdict}: {kinds} ({time.perf_counter() - t:.1f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--rank", type=int, default=6, choices=(6, 7, 8))
    p.add_argument("--decide", action="store_true", help="also run the decision procedure")
    p.add_argument("--interval-cap", type=int, default=10**7)
    main(Config(**vars(p.parse_args())))
