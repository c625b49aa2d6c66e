"""Compare decomposition invariants across random changes of basis."""

from __future__ import annotations

import argparse

from comodec.builders import corpus_comodules, randomized_basis
from comodec.decomp import decompose_comodule


def invariants(m) -> tuple:
    r = decompose_comodule(m, checks=False)
    return (
        tuple(sorted(s.dim for s in r.summands)),
        len(r.coalgebra_graph.classes),
        len(r.comodule_graph.classes),
        r.socle.dim,
        tuple(sorted(r.flags.as_dict().items())),
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--twists", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = 0
    for name, m in corpus_comodules().items():
        base = invariants(m)
        diffs = [s for s in range(args.seed, args.seed + args.twists) if invariants(randomized_basis(m, s)) != base]
        bad += bool(diffs)
        print(f"{name:42s} {'ok' if not diffs else f'MISMATCH seeds {diffs}'}")
    print(f"\n{bad} instance(s) with mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
