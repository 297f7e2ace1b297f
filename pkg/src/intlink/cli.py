"""Command-line front end.

Exit codes: 0 on pass/success, 1 on fail/absence, 2 on usage errors or
unrecoverable degeneracy.  Output is byte-identical for identical argv and
input files; all randomness is seeded from the command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import fixtures
from .complexes import (
    read_complex,
    remove_top_simplices,
    serialize_complex,
    standard_complex,
)
from .errors import DegeneracyError, PreconditionError, SamplingError
from .geometry import is_linear_embedding, lk2, mix_seed, read_config, sample_config
from .spheres import canonical_pairs, enumerate_sphere_pairs
from .verify import (
    extension_crosscheck,
    linking_parity_audit,
    linkless_search,
    linkless_verify,
    vkf_parity,
)

PASS, FAIL, USAGE = 0, 1, 2


def _write_out(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".intlink-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _resolve_complex(args):
    if getattr(args, "complex_file", None):
        return read_complex(args.complex_file)
    K = standard_complex(args.name, args.n)
    for spec in getattr(args, "minus", None) or []:
        K = remove_top_simplices(K, [tuple(spec.split())])
    return K


def _resolve_config(args, labels):
    if getattr(args, "config", None):
        return read_config(args.config)
    if getattr(args, "seed", None) is None:
        raise SystemExit("either --config or --seed is required")
    return sample_config(args.seed, 2 * args.n, labels, args.bound)


def _emit_report(report, args):
    text = report.to_json() if args.format == "json" else report.to_text()
    _write_out(text, args.out)


def _pair_lines(pairs):
    lines = []
    for i, pair in enumerate(pairs):
        lines.append(
            f"pair {i}: gamma={{{'; '.join(pair.gamma.facet_strings())}}} "
            f"gamma'={{{'; '.join(pair.gamma_prime.facet_strings())}}} "
            f"shape={pair.gamma.shape}|{pair.gamma_prime.shape}"
        )
    return lines


def cmd_build(args):
    K = standard_complex(args.name, args.n)
    _write_out(serialize_complex(K), args.out)
    if args.out is not None:
        print(f"f_vector: {K.f_vector()}")
    else:
        sys.stdout.write(f"# f_vector: {K.f_vector()}\n")
    return PASS


def cmd_pairs(args):
    K = standard_complex(args.name, args.n)
    if args.full:
        pairs = enumerate_sphere_pairs(K, args.n - 1, args.n)
    else:
        pairs = canonical_pairs(args.name, args.n)
    if args.format == "json":
        payload = {
            "subject": K.name,
            "mode": "full" if args.full else "canonical",
            "pairs": [
                {
                    "gamma": "; ".join(p.gamma.facet_strings()),
                    "gamma_prime": "; ".join(p.gamma_prime.facet_strings()),
                    "shape": str(p.gamma.shape),
                    "shape_prime": str(p.gamma_prime.shape),
                }
                for p in pairs
            ],
        }
        _write_out(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _write_out("\n".join(_pair_lines(pairs)) + "\n", args.out)
    return PASS


def cmd_sample(args):
    K = _resolve_complex(args)
    cfg = sample_config(args.seed, 2 * args.n, K.labels, args.bound)
    _write_out(cfg.serialize(), args.out)
    return PASS


def cmd_check_embedding(args):
    K = _resolve_complex(args)
    cfg = _resolve_config(args, K.labels)
    ok = is_linear_embedding(K, cfg)
    print(f"embedding: {str(ok).lower()} (config {cfg.fingerprint()[:12]})")
    return PASS if ok else FAIL


def cmd_lk(args):
    K = standard_complex(args.name, args.n)
    cfg = _resolve_config(args, K.labels)
    pairs = canonical_pairs(args.name, args.n)
    chosen = range(len(pairs)) if args.pair is None else [args.pair]
    all_stable = True
    for i in chosen:
        pair = pairs[i]
        bits = [
            lk2(pair.gamma, pair.gamma_prime, cfg, apex_seed=mix_seed(args.apex_seed, i, rep))
            for rep in range(args.apexes)
        ]
        stable = len(set(bits)) == 1
        all_stable = all_stable and stable
        print(f"pair {i}: lk2={bits[0]} apexes={args.apexes} stable={str(stable).lower()}")
    return PASS if all_stable else FAIL


def cmd_vkf(args):
    if args.config:
        cfg = read_config(args.config)
        report = vkf_parity(args.name, args.n, cfg)
    else:
        report = None
        K = standard_complex(args.name, args.n)
        for attempt in range(args.resamples):
            cfg = sample_config(mix_seed(args.seed, attempt), 2 * args.n, K.labels, args.bound)
            report = vkf_parity(args.name, args.n, cfg)
            if report.status != "DEGENERATE":
                break
    _emit_report(report, args)
    if report.status == "DEGENERATE":
        return USAGE
    return PASS if report.passed else FAIL


def cmd_audit(args):
    cfg = _resolve_config(args, standard_complex(args.name, args.n).labels)
    report = linking_parity_audit(args.name, args.n, cfg, seed=args.apex_seed)
    _emit_report(report, args)
    if report.status == "DEGENERATE":
        return USAGE
    return PASS if report.passed else FAIL


def cmd_crosscheck(args):
    cfg = _resolve_config(args, standard_complex(args.name, args.n).labels)
    ok = extension_crosscheck(args.name, args.n, cfg, seed=args.apex_seed, apexes=args.apexes)
    print(f"crosscheck: {str(ok).lower()} (config {cfg.fingerprint()[:12]})")
    return PASS if ok else FAIL


def cmd_linkless_verify(args):
    K = _resolve_complex(args)
    cfg = read_config(args.config)
    ok = linkless_verify(K, args.n, cfg, seed=args.apex_seed)
    print(f"link-trivial: {str(ok).lower()} (config {cfg.fingerprint()[:12]})")
    return PASS if ok else FAIL


def cmd_linkless_search(args):
    K = _resolve_complex(args)
    cfg, stats = linkless_search(K, args.n, args.seed, args.restarts, args.bound)
    payload = {"found": cfg is not None, "stats": stats.to_json_dict()}
    if args.format == "json":
        if cfg is not None:
            payload["config"] = cfg.serialize()
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(
            "search: "
            + ("found" if cfg is not None else "absence")
            + " "
            + " ".join(f"{k}={v}" for k, v in stats.to_json_dict().items())
        )
        if cfg is not None:
            sys.stdout.write(cfg.serialize())
    if cfg is not None and args.out:
        _write_out(cfg.serialize(), args.out)
    return PASS if cfg is not None else FAIL


def cmd_fixtures_selftest(args):
    ok, checks = fixtures.selftest()
    for name, good, detail in checks:
        line = f"{'ok  ' if good else 'FAIL'} {name}"
        if detail and not good:
            line += f"  [{detail}]"
        print(line)
    print(f"selftest: {'pass' if ok else 'fail'} ({len(checks)} checks)")
    return PASS if ok else FAIL


def _add_common(p, n_default=1):
    p.add_argument("--n", type=int, default=n_default, help="complex parameter n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write primary output to this file (atomically)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="intlink",
        description="Build, draw and audit small intrinsically linked complexes exactly.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a named complex, write its file form")
    p.add_argument("name", choices=("N1", "N2", "N3", "SIGMA", "JOIN3"))
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("pairs", help="list canonical or exhaustively enumerated sphere pairs")
    p.add_argument("name", choices=("N1", "N2", "N3"))
    p.add_argument("--full", action="store_true", help="blind enumeration instead of canonical")
    _add_common(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("sample", help="sample a general-position integer configuration")
    p.add_argument("name", choices=("N1", "N2", "N3", "SIGMA", "JOIN3"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--minus", action="append", help="delete a maximal simplex (labels, space-separated)")
    _add_common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check-embedding", help="test whether a configuration embeds the complex")
    p.add_argument("name", choices=("N1", "N2", "N3", "SIGMA", "JOIN3"))
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--minus", action="append")
    _add_common(p)
    p.set_defaults(func=cmd_check_embedding)

    p = sub.add_parser("lk", help="linking numbers of canonical pairs, repeated over apexes")
    p.add_argument("name", choices=("N1", "N2", "N3"))
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--pair", type=int, help="restrict to one pair index")
    p.add_argument("--apexes", type=int, default=10)
    p.add_argument("--apex-seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("vkf", help="double-point parity report for SIGMA or JOIN3")
    p.add_argument("name", choices=("SIGMA", "JOIN3"))
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--resamples", type=int, default=64, help="seeded resample budget on degeneracy")
    _add_common(p)
    p.set_defaults(func=cmd_vkf)

    p = sub.add_parser("audit", help="linking-parity audit over canonical pairs")
    p.add_argument("name", choices=("N1", "N2", "N3"))
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--apex-seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("crosscheck", help="cone-vs-straight-extension consistency check")
    p.add_argument("name", choices=("N1", "N2", "N3"))
    p.add_argument("--config")
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--apexes", type=int, default=3)
    p.add_argument("--apex-seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("linkless-verify", help="verify a link-trivial embedding")
    p.add_argument("name", nargs="?", choices=("N1", "N2", "N3", "SIGMA", "JOIN3"))
    p.add_argument("--complex-file")
    p.add_argument("--minus", action="append")
    p.add_argument("--config", required=True)
    p.add_argument("--apex-seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_linkless_verify)

    p = sub.add_parser("linkless-search", help="randomized search for a link-trivial embedding")
    p.add_argument("name", nargs="?", choices=("N1", "N2", "N3", "SIGMA", "JOIN3"))
    p.add_argument("--complex-file")
    p.add_argument("--minus", action="append")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--restarts", type=int, default=1000)
    p.add_argument("--bound", type=int, default=1000)
    _add_common(p)
    p.set_defaults(func=cmd_linkless_search)

    p = sub.add_parser("fixtures-selftest", help="re-verify every shipped fixture")
    _add_common(p)
    p.set_defaults(func=cmd_fixtures_selftest)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (DegeneracyError, SamplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (PreconditionError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
