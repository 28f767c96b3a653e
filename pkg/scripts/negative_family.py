"""The elements w0 s_i of type A: verdicts, and the table query that rejects
the interior ones."""

import argparse
import json
from dataclasses import dataclass

from schubert_spherical import decide_spherical, root_system
from schubert_spherical.weyl import longest_element


@dataclass
class Config:
    min_n: int = 4
    max_n: int = 7


def main(cfg: Config):
    for n in range(cfg.min_n, cfg.max_n + 1):
        S = root_system("A", n - 1)
        w0 = longest_element(S)
        for i in range(n - 1):
            cert = decide_spherical(S, w0.right_mul(i))
            extra = json.dumps(cert.reason.params()["pair"]) if cert.kind == "NegativeClassification" else ""
            print(f"S{n} w0 s{i + 1}: {cert.verdict:<14} {cert.kind:<22} {extra}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=7)
    main(Config(**vars(p.parse_args())))
