"""Write the bundled benchmark corpus: 80 row-reduced, non-catastrophic codes.

Stratified as 20 codes per field order q in {2, 3, 4, 5}, with the degree
delta cycling through 2..6 and (n, k) drawn with n <= 4, k < n.  Degree-1
codes are left out: both FAST variants visit exactly the same nodes there.
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

from freedist.codegen import random_code
from freedist.polymat import code_to_dict

PER_FIELD = 20
ORDERS = (2, 3, 4, 5)
MIN_DELTA, MAX_DELTA = 2, 6


def build(seed: int) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for q in ORDERS:
        for i in range(PER_FIELD):
            delta = MIN_DELTA + i % (MAX_DELTA - MIN_DELTA + 1)
            n = rng.randint(2, 4)
            k = rng.randint(1, n - 1)
            G = random_code(rng, q, n, k, delta)
            out.append(code_to_dict(G, f"q{q}-{i:02d}-n{n}k{k}d{delta}"))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("*.json"):
        old.unlink()
    codes = build(args.seed)
    for d in codes:
        (out / f"{d['id']}.json").write_text(json.dumps(d) + "\n")
    print(f"wrote {len(codes)} codes to {out}")


if __name__ == "__main__":
    main()
