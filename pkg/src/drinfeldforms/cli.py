"""Command-line front door.

Subcommands:

  expand      print one truncated u-expansion (g, h, delta, E, d2, EE, f)
  check       run an identity check suite; exit 1 on any failure
  experiment  run open-ended comparisons and report what was observed
  lvalue      print one truncated Pellarin L partial sum

Every output carries a header echoing the full configuration (field,
precision, seed, caps), and all output is byte-stable for a fixed
configuration.  Exit codes: 0 success, 1 identity failure, 2 usage
error, 3 precision/resource limit.
"""

import argparse
import random
import sys

from .errors import PrecisionError, ResourceLimitError
from .fields import finite_field
from .polynomials import BiPoly
from .forms import FormCatalog
from .identities import (BruteForceInstance, check_lvals, goss_degenerate_check,
                         lemma1_check, lemma2_check, lemma3_bruteforce,
                         pellarin_partial)
from .serialize import (bipoly_tsv_rows, canonical_json, lvalue_to_obj,
                        useries_to_obj, useries_tsv_rows)
from .shadowed import check_d2_approx, enumerate_shadowed, is_shadowed_partition
from .taurec import (TauSequence, g_sequence, matrix_det, operator_l1,
                     operator_l2, sym_power_matrix)

USAGE_EXIT = 2
RESOURCE_EXIT = 3

CHECK_TARGETS = ("lemma1", "lemma2", "lemma3", "goss-degenerate", "lvals",
                 "e-power", "f-power", "d2-approx", "recurrence-l1",
                 "recurrence-l2", "sym-det", "partitions")
EXPERIMENT_NAMES = ("conjecture-fs", "resolve-recursive", "ee-power-beyond-q")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="field characteristic")
    common.add_argument("--e", type=int, default=1, help="extension degree over F_p")
    common.add_argument("--modulus", type=str, default=None,
                        help="comma-separated F_p digits of the defining polynomial, "
                             "low to high, monic of degree e")
    common.add_argument("--uprec", type=int, default=32, help="u-adic working precision")
    common.add_argument("--tcap", type=int, default=None,
                        help="abort (exit 3) if any coefficient exceeds this t-degree")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--out", type=str, default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="drinfeldforms",
        description="Exact u-expansions of Drinfeld modular forms, their "
                    "t-deformations, and the identity checks that tie them together.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", parents=[common],
                              help="print one truncated u-expansion")
    p_expand.add_argument("--form", required=True,
                          choices=("g", "h", "delta", "E", "d2", "EE", "f"))
    p_expand.add_argument("--l", type=str, default=None)
    p_expand.add_argument("--nu", type=int, default=None)

    p_check = sub.add_parser("check", parents=[common],
                             help="verify identities; exit 1 on failure")
    p_check.add_argument("--identity", required=True, choices=CHECK_TARGETS)
    p_check.add_argument("--l", type=str, default=None)
    p_check.add_argument("--nu", type=int, default=None)
    p_check.add_argument("--n", type=int, default=None)
    p_check.add_argument("--k", type=int, default=None)
    p_check.add_argument("--trials", type=int, default=None)

    p_exp = sub.add_parser("experiment", parents=[common],
                           help="run a reported (non-asserted) comparison")
    p_exp.add_argument("--name", required=True, choices=EXPERIMENT_NAMES)
    p_exp.add_argument("--l", type=str, default=None)
    p_exp.add_argument("--nu", type=int, default=None)
    p_exp.add_argument("--s", type=str, default=None,
                       help="s values: single value, a..b range, or comma list")

    p_lv = sub.add_parser("lvalue", parents=[common],
                          help="print one truncated Pellarin L partial sum")
    p_lv.add_argument("--alpha", type=int, default=1)
    p_lv.add_argument("--beta", type=int, default=1)
    p_lv.add_argument("--n", type=int, default=2)

    return parser


def _parse_symbolic(text, q):
    """Accept plain ints plus the symbolic forms q, q+N, q-N."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if text == "q":
        return q
    for sep, sign in (("+", 1), ("-", -1)):
        if text.startswith("q" + sep):
            return q + sign * int(text[2:])
    raise ValueError(f"cannot parse value {text!r}")


def _parse_values(text, q):
    """A single value, an a..b range, or a comma list (symbolic q allowed)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            out.extend(range(_parse_symbolic(lo, q), _parse_symbolic(hi, q) + 1))
        else:
            out.append(_parse_symbolic(chunk, q))
    return out


def _build_field(args):
    modulus = None
    if args.modulus is not None:
        modulus = [int(c) for c in args.modulus.split(",")]
    return finite_field(args.p, args.e, modulus)


def _header(args, field, extra=None):
    header = {
        "command": args.command,
        "p": field.p,
        "e": field.e,
        "q": field.q,
        "modulus": list(field.modulus),
        "uprec": args.uprec,
        "tcap": args.tcap,
        "seed": args.seed,
        "format": args.format,
    }
    if extra:
        header.update(extra)
    return header


def _enforce_tcap(args, series_or_polys):
    if args.tcap is None:
        return
    for item in series_or_polys:
        deg = item.t_degree()
        if deg is not None and deg > args.tcap:
            raise ResourceLimitError(
                f"t-degree {deg} exceeds the configured cap {args.tcap}")


def _emit(args, text):
    data = text if isinstance(text, str) else canonical_json(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _tsv_document(header, rows):
    lines = [f"# {key}={header[key]}" for key in sorted(header)]
    lines.extend(rows)
    return "\n".join(lines) + "\n"


def _report_rows(reports):
    rows = []
    for r in reports:
        label = r.get("check") or r.get("identity") or "check"
        params = ",".join(f"{k}={r[k]}" for k in sorted(r)
                          if k not in ("check", "identity", "pass", "equal",
                                       "first_difference", "ok"))
        status = r.get("pass", r.get("ok", r.get("equal")))
        witness = r.get("first_difference")
        rows.append("\t".join([label, params, str(status), str(witness)]))
    return rows


# -- expand ----------------------------------------------------------------------


def cmd_expand(args):
    field = _build_field(args)
    catalog = FormCatalog(field, args.uprec)
    if args.form == "f":
        if args.l is None or args.nu is None:
            raise ValueError("--form f requires both --l and --nu")
        l = _parse_symbolic(args.l, field.q)
        series = catalog.f_l_nu(l, args.nu)
        extra = {"form": "f", "l": l, "nu": args.nu}
    else:
        series = {"g": lambda: catalog.g, "h": lambda: catalog.h,
                  "delta": lambda: catalog.delta, "E": lambda: catalog.e,
                  "d2": lambda: catalog.d2, "EE": lambda: catalog.ee}[args.form]()
        extra = {"form": args.form}
    _enforce_tcap(args, [series])
    header = _header(args, field, extra)
    if args.format == "tsv":
        _emit(args, _tsv_document(header, useries_tsv_rows(series)))
    else:
        _emit(args, {"header": header, "result": useries_to_obj(series)})
    return 0


# -- check ------------------------------------------------------------------------


def _tiling_counts(n_max):
    counts = [1, 1]
    while len(counts) <= n_max:
        counts.append(counts[-1] + counts[-2])
    return counts


def _run_check(args, field):
    q = field.q
    identity = args.identity
    reports = []

    def l_values(bound=q):
        if args.l is not None:
            values = _parse_values(args.l, q)
            for l in values:
                if not 1 <= l <= bound:
                    raise ValueError(f"l={l} outside the asserted range 1..{bound}")
            return values
        return list(range(1, bound + 1))

    if identity == "lemma1":
        reports.append({"check": "lemma1", "q": q, "pass": lemma1_check(field)})
    elif identity == "lemma2":
        for l in l_values():
            reports.append({"check": "lemma2", "q": q, "l": l,
                            "pass": lemma2_check(field, l)})
    elif identity == "goss-degenerate":
        for l in l_values():
            reports.append({"check": "goss-degenerate", "q": q, "l": l,
                            "pass": goss_degenerate_check(field, l)})
    elif identity == "lemma3":
        n = args.n if args.n is not None else 2
        trials = args.trials if args.trials is not None else 20
        rng = random.Random(args.seed)
        for l in l_values():
            ok = True
            for _ in range(trials):
                inst = BruteForceInstance.random(field, n, l, rng=rng, m=max(4, n))
                if not lemma3_bruteforce(inst):
                    ok = False
                    break
            reports.append({"check": "lemma3", "q": q, "n": n, "l": l,
                            "trials": trials, "pass": ok})
    elif identity == "lvals":
        n = args.n if args.n is not None else 3
        for l in l_values():
            reports.append({"check": "lvals", "q": q, "l": l, "n": n,
                            "pass": check_lvals(field, l, n)})
    elif identity == "e-power":
        catalog = FormCatalog(field, args.uprec)
        for l in l_values():
            r = catalog.check_ee_power(l)
            reports.append({"check": "e-power", "q": q, "l": l,
                            "first_difference": r["first_difference"],
                            "pass": r["equal"]})
    elif identity == "f-power":
        catalog = FormCatalog(field, args.uprec)
        nus = [args.nu] if args.nu is not None else [1, 2]
        for l in l_values():
            for nu in nus:
                r = catalog.check_f_power(l, nu)
                reports.append({"check": "f-power", "q": q, "l": l, "nu": nu,
                                "first_difference": r["first_difference"],
                                "pass": r["equal"]})
    elif identity == "d2-approx":
        catalog = FormCatalog(field, args.uprec)
        if args.k is not None:
            ks = [args.k]
        else:
            ks = []
            k = 1
            while q ** (k - 1) * (q - 1) < args.uprec and k <= 4:
                ks.append(k)
                k += 1
        for k in ks:
            r = check_d2_approx(catalog, k)
            reports.append({"check": "d2-approx", "q": q, "k": k,
                            "required_valuation": r["required_valuation"],
                            "observed_valuation": r["observed_valuation"],
                            "pass": r["ok"]})
    elif identity in ("recurrence-l1", "recurrence-l2"):
        catalog = FormCatalog(field, args.uprec)
        k_max = args.k if args.k is not None else 5
        if identity == "recurrence-l1":
            op = operator_l1(catalog)
            image = op.apply(TauSequence.constant(catalog.d2, k_max))
            ok = all(series.is_zero for _, series in image.items())
            reports.append({"check": "recurrence-l1", "q": q, "sequence": "d2",
                            "k_max": k_max, "pass": ok})
            seq = g_sequence(catalog, 1, k_max)
        else:
            op = operator_l2(catalog)
            seq = g_sequence(catalog, 2, k_max)
        image = op.apply(seq)
        ok = all(series.is_zero for _, series in image.items())
        reports.append({"check": identity, "q": q, "sequence": "closed-form",
                        "k_max": k_max, "pass": ok})
    elif identity == "sym-det":
        trials = args.trials if args.trials is not None else 50
        rng = random.Random(args.seed)
        ls = _parse_values(args.l, q) if args.l is not None else [1, 2, 3, 4]

        def random_poly():
            terms = {}
            for _ in range(rng.randrange(1, 4)):
                terms[(rng.randrange(3), rng.randrange(3))] = rng.randrange(1, field.q)
            return BiPoly(field, terms)

        for l in ls:
            ok = True
            for _ in range(trials):
                a, b, c, d = (random_poly() for _ in range(4))
                det = matrix_det(sym_power_matrix(a, b, c, d, l))
                if det != (a * d - b * c) ** ((l * l + l) // 2):
                    ok = False
                    break
            reports.append({"check": "sym-det", "q": q, "l": l,
                            "trials": trials, "pass": ok})
    elif identity == "partitions":
        n_max = args.n if args.n is not None else 12
        counts = _tiling_counts(n_max)
        for n in range(n_max + 1):
            parts = enumerate_shadowed(2, n)
            ok = (len(parts) == counts[n]
                  and all(is_shadowed_partition(pt, n) for pt in parts))
            reports.append({"check": "partitions", "n": n,
                            "count": len(parts), "pass": ok})
    return reports


def cmd_check(args):
    field = _build_field(args)
    reports = _run_check(args, field)
    all_pass = all(r["pass"] for r in reports)
    header = _header(args, field, {"identity": args.identity})
    if args.format == "tsv":
        _emit(args, _tsv_document(header, _report_rows(reports)))
    else:
        _emit(args, {"header": header, "result": reports, "pass": all_pass})
    return 0 if all_pass else 1


# -- experiment ----------------------------------------------------------------------


def cmd_experiment(args):
    field = _build_field(args)
    q = field.q
    catalog = FormCatalog(field, args.uprec)
    name = args.name
    if name == "conjecture-fs":
        s_values = _parse_values(args.s, q) if args.s is not None else list(range(1, q + 1))
        reports = []
        for s in s_values:
            r = catalog.conjecture_fs(s)
            reports.append({"identity": "conjecture-fs", "s": s,
                            "equal": r["equal"],
                            "first_difference": r["first_difference"],
                            "compared_precision": r["compared_precision"]})
        extra = {"name": name, "s": s_values}
    elif name == "resolve-recursive":
        nu = args.nu if args.nu is not None else 3
        r = catalog.resolve_recursive(nu)
        reports = r["candidates"]
        extra = {"name": name, "nu": nu, "matching": r["matching"]}
    else:  # ee-power-beyond-q
        l = _parse_symbolic(args.l, q) if args.l is not None else q + 1
        r = catalog.check_ee_power(l)
        reports = [{"identity": "ee-power-beyond-q", "l": l, "equal": r["equal"],
                    "first_difference": r["first_difference"],
                    "compared_precision": r["compared_precision"]}]
        extra = {"name": name, "l": l}
    header = _header(args, field, extra)
    if args.format == "tsv":
        _emit(args, _tsv_document(header, _report_rows(reports)))
    else:
        _emit(args, {"header": header, "result": reports})
    return 0


# -- lvalue ----------------------------------------------------------------------------


def cmd_lvalue(args):
    field = _build_field(args)
    value = pellarin_partial(field, args.alpha, args.beta, args.n)
    _enforce_tcap(args, [value.num])
    header = _header(args, field, {"alpha": args.alpha, "beta": args.beta,
                                   "n": args.n})
    if args.format == "tsv":
        rows = bipoly_tsv_rows(value.num, "num") + bipoly_tsv_rows(
            value.den.to_bipoly(), "den")
        _emit(args, _tsv_document(header, rows))
    else:
        obj = lvalue_to_obj(value)
        obj.pop("alpha"), obj.pop("beta"), obj.pop("n")
        _emit(args, {"header": header,
                     "result": {"alpha": args.alpha, "beta": args.beta,
                                "n": args.n, "num": obj["num"], "den": obj["den"]}})
    return 0


HANDLERS = {"expand": cmd_expand, "check": cmd_check,
            "experiment": cmd_experiment, "lvalue": cmd_lvalue}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return HANDLERS[args.command](args)
    except (PrecisionError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RESOURCE_EXIT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
