"""Search random k = 2 codes for one where the bidirectional search goes wrong
once zero-state returns are stored like ordinary states.

With ``--emit PATH`` the first ``--keep`` codes searched are also written as a
JSON list, so the regression test has a fixed candidate set to run against.
"""

from __future__ import annotations

import argparse
import json
import random

from freedist.bidir import bidir_free_distance
from freedist.codegen import random_code
from freedist.distances import dijkstra_free_distance
from freedist.polymat import code_to_dict


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=2000)
    ap.add_argument("--max-delta", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--emit", default=None, help="write searched codes to this JSON file")
    ap.add_argument("--keep", type=int, default=40)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    kept, witness = [], None
    for i in range(args.tries):
        q = rng.choice((2, 3, 4, 5))
        n = rng.randint(3, args.max_n)
        G = random_code(rng, q, n, 2, rng.randint(1, args.max_delta))
        truth = dijkstra_free_distance(G)
        broken, _ = bidir_free_distance(G, _store_zero_state=True)
        if len(kept) < args.keep:
            kept.append({**code_to_dict(G, f"try{i}"), "dfree": truth})
        if broken != truth:
            witness = {"try": i, "oracle": truth, "zero_state_stored": broken, **code_to_dict(G)}
            print(json.dumps(witness))
            break
    else:
        print(f"no witness in {args.tries} tries")
    if args.emit:
        if witness is not None:
            kept.insert(0, {**code_to_dict(G, "witness"), "dfree": truth})
        with open(args.emit, "w") as fh:
            json.dump(kept, fh, indent=1)
            fh.write("\n")


if __name__ == "__main__":
    main()
