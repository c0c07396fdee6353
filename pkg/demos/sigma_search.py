"""Search for sigma(2, 2), the least N with PH(2, 3, 2, N), and record it.

Run from the repository root:

    python demos/sigma_search.py            # print the result
    python demos/sigma_search.py --write    # refresh artifacts/sigma_2_2.json
"""
import argparse
import json
import pathlib

from phlab.ramsey import Fails, Holds, find_witness, sigma

ARTIFACT = pathlib.Path(__file__).resolve().parent.parent / "artifacts" / "sigma_2_2.json"


def record(node_budget=10**8):
    mw = sigma(2, 2, node_budget=node_budget)
    if not mw.known:
        raise SystemExit(f"sigma(2, 2) not determined: {mw.reason}")
    N = mw.value
    below = mw.verdicts[N - 1]
    top = mw.verdicts[N]
    assert isinstance(top, Holds) and isinstance(below, Fails)
    # the counterexample is re-checked independently of the search
    assert find_witness(below.witness, 3) is None
    return {
        "quantity": "sigma(2,2) = least N with PH(k=2, m=3, n=2, N)",
        "value": N,
        "node_budget": node_budget,
        "counterexample_at_N_minus_1": below.witness.to_json(),
        "exhaustion_at_N": {"nodes": top.nodes, "log_hash": top.log_hash},
        "verdicts": {
            str(n): ("Holds" if isinstance(v, Holds) else "Fails") for n, v in mw.verdicts.items()
        },
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    ap.add_argument("--nodes", type=int, default=10**8)
    args = ap.parse_args()
    data = record(args.nodes)
    print(f"sigma(2, 2) = {data['value']}")
    c = data["counterexample_at_N_minus_1"]
    print(f"  N = {c['N']}: colouring {''.join(map(str, c['colors']))} has no large homogeneous triple")
    ex = data["exhaustion_at_N"]
    print(f"  N = {data['value']}: search exhausted after {ex['nodes']} nodes, log {ex['log_hash'][:16]}...")
    if args.write:
        ARTIFACT.write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {ARTIFACT}")
