"""Print the right weak order of S4 with N_Delta labels, toral cells and
singular elements."""

import argparse
from dataclasses import dataclass

from schubert_spherical import decide_spherical, enumerate_group, format_element, root_system
from schubert_spherical.smooth import is_smooth
from schubert_spherical.spherical import toral_cell_test
from schubert_spherical.weyl import left_descents, right_descents


@dataclass
class Config:
    edges: bool = False


def main(cfg: Config):
    S = root_system("A", 3)
    W = sorted(enumerate_group(S), key=lambda w: (w.length, format_element(w)))
    print(f"{'w':<6}{'len':>4}  {'N_Delta':<10}{'toral':<7}{'smooth':<8}certificate")
    for w in W:
        nd = ",".join(f"a{i + 1}" for i in sorted(left_descents(w))) or "-"
        cert = decide_spherical(S, w)
        print(f"{format_element(w):<6}{w.length:>4}  {nd:<10}{str(toral_cell_test(w)):<7}"
              f"{str(is_smooth(w).smooth):<8}{cert.kind}")
    if cfg.edges:
        for w in W:
            for i in sorted(right_descents(w)):
                print(f"{format_element(w.right_mul(i))} -> {format_element(w)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--edges", action="store_true", help="also list the Hasse edges")
    main(Config(**vars(p.parse_args())))
