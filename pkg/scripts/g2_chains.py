"""The two maximal chains of the G2 weak order with their Levi supports and
sphericity certificates."""

import argparse
import json
from dataclasses import dataclass

from schubert_spherical import decide_spherical, enumerate_group, format_element, root_system
from schubert_spherical.order import maximal_chains_weak_right
from schubert_spherical.weyl import left_descents


@dataclass
class Config:
    json: bool = False


def main(cfg: Config):
    S = root_system("G", 2)
    W = enumerate_group(S)
    for k, chain in enumerate(maximal_chains_weak_right(S, W), 1):
        print(f"chain {k}")
        for w in chain:
            cert = decide_spherical(S, w)
            nd = sorted(f"a{i + 1}" for i in left_descents(w))
            line = f"  {format_element(w):<18} N_Delta={nd} {cert.verdict} via {cert.kind}"
            print(line if not cfg.json else json.dumps(cert.to_json()))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--json", action="store_true", help="print full certificates")
    main(Config(**vars(p.parse_args())))
