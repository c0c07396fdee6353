"""Command-line front end: ``phlab <command> ...``.

Exit status is 0 for a definite answer, 2 when a budget cut the work short
(Exceeded, StepLimit, Unknown) and 1 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import descent, hierarchy, ordinals, props, ramsey, slow
from .hierarchy import Budget, Exceeded, Value
from .ordinals import ParseError, parse, render

GRAMMAR = """\
usage: phlab [options] <command> ...

commands:
  ord eval <ordinal>          canonical form and kind
  ord cmp <a> <b>             compare two ordinals
  ord encode <ordinal>        digit string over {1,2,3,4}
  ord decode <digits>         inverse of encode (comma-separated digits)
  fseq <ordinal> <n>          n-th fundamental-sequence member
  step <a> <n> <b>            decide a ->_n b, with a checkable witness
  fgh <ordinal> <x>           fast-growing hierarchy F_a(x)
  feps <x>                    F_eps0(x)
  inv <x>                     inverse of F_eps0, with refutations
  diamond <x>                 the slow function F_diamond(x)
  slowh <ordinal> <x>         slow hierarchy F_diamond_{eps0+a}(x)
  shape <p>                   split p = <q, N> and recover the stage
  pair <x> <y> | unpair <p>   Cantor pairing
  ph <k> <m> <n> <N>          decide PH(k, m, n, N)
  sigma <n> <k>               least N with PH(k, n+1, n, N)
  minwit <k> <m> <n>          least N with PH(k, m, n, N)
  chain <n>                   links of F_3(n) >= 2^2^n >= 2^140n^2 >= 10^35n^2
  props <suite>|all           run invariant suites

ordinals:  ordinal := term ('+' term)* | '0'
           term    := 'w' ('^' atom)? ('*' nat)? | nat
           atom    := nat | 'w' | '(' ordinal ')'      w_k = omega_k

options:
  --bits N      max value bits (default 1048576)
  --steps N     max rewrite steps (default 10000000)
  --nodes N     search node budget (default 100000000)
  --ncap N      largest N tried by sigma/minwit (default 64)
  --config F    JSON file with any of max_value_bits, max_steps,
                node_budget, N_cap, output, trace, full
  --json        one JSON object on stdout; timings under "timing"
  --trace F     write the rewrite trace as JSON lines to F
  --full        print numbers above 4096 bits in full
"""

ELIDE_BITS = 4096


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_value_bits: int = 2**20
    max_steps: int = 10**7
    node_budget: int = 10**8
    N_cap: int = 64
    output: str = "text"
    trace: Optional[str] = None
    full: bool = False

    def __post_init__(self):
        for name in ("max_value_bits", "max_steps", "node_budget"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be positive")
        if self.N_cap < 0:
            raise UsageError("N_cap must be nonnegative")
        if self.output not in ("text", "json"):
            raise UsageError("output must be 'text' or 'json'")

    @property
    def budget(self) -> Budget:
        return Budget(self.max_value_bits, self.max_steps)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def print_help(self, file=None):
        (file or sys.stdout).write(GRAMMAR)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="phlab", add_help=True)
    p.add_argument("--bits", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--nodes", type=int)
    p.add_argument("--ncap", type=int)
    p.add_argument("--config")
    p.add_argument("--json", action="store_true", default=None)
    p.add_argument("--trace")
    p.add_argument("--full", action="store_true", default=None)
    p.add_argument("command")
    p.add_argument("args", nargs="*")
    return p


ARITY = {
    "fseq": 2, "step": 3, "fgh": 2, "feps": 1, "inv": 1, "diamond": 1, "slowh": 2,
    "shape": 1, "pair": 2, "unpair": 1, "ph": 4, "sigma": 2, "minwit": 3, "chain": 1,
    "props": 1,
}
ORD_ARITY = {"eval": 1, "cmp": 2, "encode": 1, "decode": 1}


def load_config(ns) -> RunConfig:
    fields = {}
    if ns.config:
        try:
            with open(ns.config) as fp:
                raw = json.load(fp)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read config {ns.config}: {e}")
        unknown = set(raw) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        fields.update(raw)
    # explicit flags win over the file
    for flag, key in (("bits", "max_value_bits"), ("steps", "max_steps"),
                      ("nodes", "node_budget"), ("ncap", "N_cap"), ("trace", "trace")):
        if getattr(ns, flag) is not None:
            fields[key] = getattr(ns, flag)
    if ns.json:
        fields["output"] = "json"
    if ns.full:
        fields["full"] = True
    return RunConfig(**fields)


def _nat(s: str, what="argument") -> int:
    try:
        v = int(s)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {s!r}")
    if v < 0:
        raise UsageError(f"{what} must be nonnegative, got {v}")
    return v


def _num(v: int, cfg: RunConfig) -> str:
    if cfg.full or v.bit_length() <= ELIDE_BITS:
        return str(v)
    return f"~2^{v.bit_length()}"


def _outcome(out, cfg: RunConfig) -> tuple[dict, str, int]:
    if isinstance(out, Value):
        return ({"outcome": "value", "value": _num(out.value, cfg), "bits": out.value.bit_length(),
                 "steps": out.steps}, _num(out.value, cfg), 0)
    if isinstance(out, Exceeded):
        lb = out.lower_bound
        return ({"outcome": "exceeded", "lower_bound": _num(lb, cfg), "bits": lb.bit_length(),
                 "steps": out.steps}, f"Exceeded: value >= {_num(lb, cfg)}", 2)
    return ({"outcome": "step-limit", "steps": out.steps}, f"StepLimit after {out.steps} steps", 2)


def _with_trace(cfg: RunConfig, fn):
    if not cfg.trace:
        return fn(None)
    with open(cfg.trace, "w") as fp:
        return fn(hierarchy.JsonlTrace(fp))


def _verdict(v) -> tuple[dict, str, int]:
    if isinstance(v, ramsey.Holds):
        return {"verdict": "Holds", "nodes": v.nodes, "log_hash": v.log_hash}, "Holds", 0
    if isinstance(v, ramsey.Fails):
        return ({"verdict": "Fails", "nodes": v.nodes, "coloring": v.witness.to_json()},
                "Fails " + "".join(map(str, v.witness.colors)), 0)
    return {"verdict": "Unknown", "reason": v.reason, "nodes": v.nodes}, f"Unknown ({v.reason})", 2


def _min_witness(mw: ramsey.MinWitness) -> tuple[dict, str, int]:
    verdicts = {str(N): _verdict(v)[0] for N, v in mw.verdicts.items()}
    data = {"value": mw.value, "reason": mw.reason, "verdicts": verdicts}
    if mw.known:
        return data, str(mw.value), 0
    return data, f"Unknown ({mw.reason})", 2


def _ord_command(sub: str, args: list[str], cfg) -> tuple[dict, str, int]:
    if sub not in ORD_ARITY:
        raise UsageError(f"unknown ord subcommand {sub!r}")
    if len(args) != ORD_ARITY[sub]:
        raise UsageError(f"ord {sub} takes {ORD_ARITY[sub]} argument(s)")
    if sub == "eval":
        a = parse(args[0])
        return {"ordinal": render(a), "kind": ordinals.classify(a)}, render(a), 0
    if sub == "cmp":
        c = ordinals.compare(parse(args[0]), parse(args[1]))
        return {"cmp": c}, "<=>"[c + 1], 0
    if sub == "encode":
        d = ordinals.encode_digits(parse(args[0]))
        text = ordinals.digits_to_text(d)
        return {"digits": text, "code": str(ordinals.code_value(d))}, text, 0
    a = ordinals.decode_digits(ordinals.digits_from_text(args[0]))
    return {"ordinal": render(a)}, render(a), 0


def run(command: str, args: list[str], cfg: RunConfig) -> tuple[dict, str, int]:
    """Execute one command; returns (json payload, text line, exit status)."""
    if command == "ord":
        if not args:
            raise UsageError("ord needs a subcommand")
        return _ord_command(args[0], args[1:], cfg)
    if command not in ARITY:
        raise UsageError(f"unknown command {command!r}")
    if len(args) != ARITY[command]:
        raise UsageError(f"{command} takes {ARITY[command]} argument(s)")
    budget = cfg.budget

    if command == "fseq":
        b = hierarchy.fund_seq(parse(args[0]), _nat(args[1], "n"))
        return {"ordinal": render(b)}, render(b), 0
    if command == "step":
        a, n, b = parse(args[0]), _nat(args[1], "n"), parse(args[2])
        cert = descent.certify_step_down(a, n, b)
        if cert is None:
            return {"holds": False}, "no", 0
        descent.check_descent(cert)
        data = {"holds": True, "certificate": cert.to_json(), "size": descent.certificate_size(cert)}
        try:
            path = hierarchy.step_down(a, n, b, max_length=64)
        except hierarchy.PathBudgetExceeded:
            path = None
        if path is not None:
            data["path"] = [render(x) for x in path.ordinals]
            return data, " -> ".join(data["path"]), 0
        return data, f"yes (certificate with {data['size']} nodes)", 0
    if command == "fgh":
        a, x = parse(args[0]), _nat(args[1], "x")
        return _outcome(_with_trace(cfg, lambda t: hierarchy.fgh_eval(a, x, budget, t)), cfg)
    if command == "feps":
        x = _nat(args[0], "x")
        return _outcome(_with_trace(cfg, lambda t: hierarchy.f_eps0_eval(x, budget, t)), cfg)
    if command == "diamond":
        x = _nat(args[0], "x")
        return _outcome(_with_trace(cfg, lambda t: slow.f_diamond(x, budget, t)), cfg)
    if command == "slowh":
        a, x = parse(args[0]), _nat(args[1], "x")
        return _outcome(_with_trace(cfg, lambda t: slow.slow_hierarchy_eval(a, x, budget, t)), cfg)
    if command == "inv":
        cert = slow.f_eps0_inverse_certified(_nat(args[0], "x"))
        refs = [{"z": r.z, "method": r.method, "lower_bound": _num(r.lower_bound, cfg)}
                for r in cert.refutations]
        return {"value": cert.value, "refutations": refs, "checked": cert.check()}, str(cert.value), 0
    if command == "shape":
        s = slow.slow_proof_shape(_nat(args[0], "p"), budget)
        text = f"q={s.q} N={s.N} stage={'none' if s.stage is None else s.stage}"
        return s.to_json(), text, 0
    if command == "pair":
        p = slow.cantor_pair(_nat(args[0], "x"), _nat(args[1], "y"))
        return {"pair": str(p)}, str(p), 0
    if command == "unpair":
        x, y = slow.cantor_unpair(_nat(args[0], "p"))
        return {"x": str(x), "y": str(y)}, f"{x} {y}", 0
    if command == "ph":
        k, m, n, N = (_nat(s) for s in args)
        return _verdict(ramsey.ph_holds(k, m, n, N, cfg.node_budget))
    if command == "sigma":
        n, k = _nat(args[0], "n"), _nat(args[1], "k")
        return _min_witness(ramsey.sigma(n, k, cfg.node_budget, cfg.N_cap))
    if command == "minwit":
        k, m, n = (_nat(s) for s in args)
        return _min_witness(ramsey.min_witness(k, m, n, cfg.node_budget, cfg.N_cap))
    if command == "chain":
        links = ramsey.chain_links(_nat(args[0], "n"))
        ok = all(links.values())
        lines = [f"{name}: {'ok' if v else 'FAILS'}" for name, v in links.items()]
        return {"links": links, "holds": ok}, "\n".join(lines + ["holds" if ok else "fails"]), 0
    # props
    names = list(props.SUITES) if args[0] == "all" else [args[0]]
    unknown = [s for s in names if s not in props.SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; known: {', '.join(props.SUITES)}, all")
    results = [props.run_suite(s) for s in names]
    lines = [f"{r.name}: {'PASS' if r.ok else 'FAIL'} passed={r.passed} failed={r.failed} "
             f"skipped={r.skipped}" for r in results]
    ok = all(r.ok for r in results)
    return {"suites": [r.to_json() for r in results]}, "\n".join(lines), 0 if ok else 1


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    argv = sys.argv[1:] if argv is None else argv
    try:
        ns = _build_parser().parse_args(argv)
        cfg = load_config(ns)
        t0 = time.perf_counter()
        data, text, status = run(ns.command, ns.args, cfg)
        elapsed = time.perf_counter() - t0
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n\n{GRAMMAR}")
        return 1
    except (ParseError, ordinals.DecodeError) as e:
        sys.stderr.write(f"parse error: {e}\n")
        return 1
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    if cfg.output == "json":
        data = dict(data, timing={"seconds": round(elapsed, 6)})
        sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
