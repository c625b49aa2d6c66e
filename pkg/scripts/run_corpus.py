"""Decompose every corpus comodule and print a one-line summary per instance."""

from __future__ import annotations

import argparse
import time

from comodec.builders import corpus_comodules
from comodec.decomp import decompose_comodule, verify_structure


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--verify", action="store_true", help="also run the structural checks")
    args = ap.parse_args()
    header = f"{'instance':42s} {'dim':>4s} {'summands':18s} {'socle':>5s}  flags"
    print(header)
    print("-" * len(header))
    for name, m in corpus_comodules().items():
        start = time.perf_counter()
        r = decompose_comodule(m, checks=False)
        dims = "+".join(str(s.dim) for s in r.summands) or "0"
        on = [k for k, v in r.flags.as_dict().items() if v]
        line = f"{name:42s} {m.dim:4d} {dims:18s} {r.socle.dim:5d}  {','.join(on)}"
        if args.verify:
            checks = verify_structure(m)
            fails = [c.name for c in checks if c.status == "fail"]
            line += f"  checks: {len(checks) - len(fails)}/{len(checks)} ok" + (f" FAIL {fails}" if fails else "")
        print(line + f"  [{time.perf_counter() - start:.2f}s]")


if __name__ == "__main__":
    main()
