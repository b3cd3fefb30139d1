"""``fglcalc`` command-line interface.

Exit codes: 0 when every check holds (or plain output was produced),
1 for usage or input errors, 2 when a mathematical check failed.

Output formats are ``text`` (default), ``json`` and ``csv``.  JSON documents
have the keys ``command, params, results, verdicts, version`` and all
rationals are written as ``"p/q"`` strings.  CSV columns per subcommand:

==========================  ==================================================
fgl show                    i, c, gamma
fgl axioms, congruence *,   name, params, status, holds, witness
zeta th3/th4, sequence
(with verdicts)
bernoulli poly/numbers      n, value
bernoulli genus             n, value
sequence numbers            k, value
sequence polys              j, k, value
zeta value                  m, a, value
zeta chi / l                n, value
==========================  ==================================================
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .bernoulli import (
    bernoulli_of_group,
    genus_polynomials,
    s_sequence,
    tilde_of_group,
    universal_bernoulli,
    universal_bernoulli_number,
)
from .congruence import (
    FAILS,
    HOLDS,
    CongruenceVerdict,
    am_scan,
    br_scan,
    fermat_sum_check,
    granville_scan,
    hermite_bachmann,
    is_prime,
    kummer_check,
    lemma4_scan,
    verdicts_to_csv,
    von_staudt_check,
)
from .exact import CPoly, CycloElem, as_rational, format_rational
from .fgl import FormalGroup, catalog, group_from_c, group_from_exp, group_from_q, group_law, universal_group
from .gfexpr import GFExprError, parse
from .sequences import nk_from_expr, nk_from_groups, nk_polynomials, nk_polynomials_from_expr
from .series import SeriesError
from .zeta import CharacterError, DirichletCharacter, chi_numbers, l_value_neg, th3_check, th4_check, zeta_neg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

GENUS_KINDS = ("alpha", "lambda", "alpha_tilde", "lambda_tilde", "s")

# options whose value may legitimately start with "-"
_VALUE_OPTIONS = ("--clist", "--exp", "--char", "--q", "--expr", "--a", "--alpha")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------
# rendering


def _text(v) -> str:
    if isinstance(v, (CPoly, CycloElem)):
        return v.to_text()
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return format_rational(v)
    return str(v)


@dataclass
class Outcome:
    command: str
    params: Dict[str, object]
    results: List[Dict[str, object]] = field(default_factory=list)
    verdicts: List[CongruenceVerdict] = field(default_factory=list)
    columns: Sequence[str] = ()
    csv_rows: Optional[List[Dict[str, object]]] = None
    text_lines: Optional[List[str]] = None

    @property
    def failed(self) -> bool:
        return any(v.failed for v in self.verdicts)


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        # indices stay numbers; every mathematical value is a string
        return v
    return _text(v)


def render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "command": out.command,
            "params": _jsonable(out.params),
            "results": _jsonable(out.results),
            "verdicts": [v.to_record() for v in out.verdicts],
            "version": __version__,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        if out.verdicts and not out.columns:
            return verdicts_to_csv(out.verdicts)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.columns)
        for row in out.csv_rows if out.csv_rows is not None else out.results:
            writer.writerow([_text(row.get(col, "")) for col in out.columns])
        if out.verdicts:
            buf.write("\n")
            buf.write(verdicts_to_csv(out.verdicts))
        return buf.getvalue()
    lines = list(out.text_lines) if out.text_lines is not None else []
    if out.text_lines is None:
        for row in out.results:
            lines.append("  ".join(f"{k}={_text(v)}" for k, v in row.items()))
    for v in out.verdicts:
        lines.append(str(v))
    if out.verdicts:
        counts = {}
        for v in out.verdicts:
            counts[v.status] = counts.get(v.status, 0) + 1
        summary = ", ".join(f"{n} {s}" for s, n in sorted(counts.items()))
        lines.append(f"{len(out.verdicts)} checks: {summary}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------
# argument helpers


def parse_int_list(text: str) -> List[int]:
    """``"3,5,7"`` or ``"1-6"`` or a mix such as ``"1-3,8"``."""
    out: List[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        if sep and lo:
            a, b = int(lo), int(hi)
            if b < a:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(a, b + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError("empty integer list")
    return out


def _int_list(text: str) -> List[int]:
    try:
        return parse_int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_clist(text: str) -> List[Fraction]:
    try:
        return [as_rational(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"cannot read c-list {text!r}") from None


def _merge_dash_values(argv: Sequence[str]) -> List[str]:
    # "--clist -1,1" would otherwise be read as two options
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _group_flags(p: argparse.ArgumentParser, q_flag: str = "--char", universal: bool = False):
    g = p.add_argument_group("group specification (exactly one)")
    g.add_argument("--group", help="catalog name: classical, todd, hurwitz, L, A, BV, BVII, additive")
    g.add_argument("--clist", help="comma-separated c_1,c_2,... of the logarithm")
    g.add_argument("--exp", help="exponential G(t) as an expression in t")
    g.add_argument(q_flag, dest="q", help="characteristic series Q(t) = t/G(t) as an expression")
    if universal:
        g.add_argument("--universal", action="store_true", help="symbolic c_1, c_2, ...")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--order", type=int, help="truncation order M (default: what the command needs)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write to this file instead of stdout")


def _group_spec_count(args) -> int:
    names = ("group", "clist", "exp", "q")
    n = sum(getattr(args, k, None) is not None for k in names)
    return n + int(bool(getattr(args, "universal", False)))


def resolve_group(args, need: int, required: bool = True, zeta: bool = False) -> Optional[FormalGroup]:
    """Build the group from exactly one specification flag."""
    count = _group_spec_count(args)
    if count > 1:
        raise UsageError("give exactly one of --group, --clist, --exp, --char/--q, --universal")
    if count == 0:
        if required:
            raise UsageError("a group specification is required")
        return None
    order = args.order if args.order is not None else need
    if order < need:
        raise UsageError(f"--order {order} is too small here; need at least {need}")
    if getattr(args, "universal", False):
        return universal_group(order)
    if args.group is not None:
        name = args.group
        # Hurwitz convention: the classical zeta function comes from G(t) = 1 - e^(-t)
        if zeta and name.lower() == "classical":
            g = catalog("hurwitz", order)
            return FormalGroup(g.log, g.exp, g.c, g.gamma, g.order, "classical")
        return catalog(name, order)
    if args.clist is not None:
        return group_from_c(_parse_clist(args.clist), order, name=f"clist[{args.clist}]")
    if args.exp is not None:
        return group_from_exp(args.exp, order, name=f"G={args.exp}")
    return group_from_q(args.q, order, name=f"Q={args.q}")


def _base_params(args, keys: Sequence[str]) -> Dict[str, object]:
    params: Dict[str, object] = {}
    for k in ("group", "clist", "exp", "q"):
        v = getattr(args, k, None)
        if v is not None:
            params[k] = v
    if getattr(args, "universal", False):
        params["universal"] = True
    for k in keys:
        v = getattr(args, k, None)
        if v is not None:
            params[k] = v
    return params


# ---------------------------------------------------------------------
# fgl


def cmd_fgl_show(args) -> Outcome:
    g = resolve_group(args, need=2)
    phi, _ = group_law(g, min(g.order, args.law_order))
    rows = [{"i": i, "c": g.c[i], "gamma": g.gamma[i]} for i in range(g.order)]
    lines = [
        f"group: {g.name}",
        f"order: {g.order}",
        f"F(t) = {g.log.to_text()}",
        f"G(t) = {g.exp.to_text()}",
        "c: " + ", ".join(_text(ci) for ci in g.c),
        "gamma: " + ", ".join(_text(gi) for gi in g.gamma),
        f"Phi(s1, s2) = {phi.to_text()} + O(deg {phi.order + 1})",
    ]
    result = {
        "name": g.name,
        "order": g.order,
        "log": g.log.to_text(),
        "exp": g.exp.to_text(),
        "c": list(g.c),
        "gamma": list(g.gamma),
        "law": phi.to_text(),
    }
    return Outcome("fgl show", _base_params(args, ["order"]), [result], [], ("i", "c", "gamma"), rows, lines)


def cmd_fgl_axioms(args) -> Outcome:
    g = resolve_group(args, need=2)
    _, report = group_law(g)
    params = _base_params(args, ["order"])
    verdicts = []
    for axiom in ("unit", "commutative", "associative"):
        ok = getattr(report, axiom)
        verdicts.append(CongruenceVerdict("axiom", {"group": g.name, "axiom": axiom, "order": report.order}, HOLDS if ok else FAILS))
    return Outcome("fgl axioms", params, [], verdicts)


# ---------------------------------------------------------------------
# bernoulli


def cmd_bernoulli_poly(args) -> Outcome:
    alpha = as_rational(args.alpha)
    g = resolve_group(args, need=args.n + 1)
    rows = []
    for n in range(args.n + 1):
        if args.universal:
            value = universal_bernoulli(n, alpha, W=args.W)
        else:
            value = bernoulli_of_group(g, n, alpha)
        rows.append({"n": n, "value": value})
    return Outcome("bernoulli poly", _base_params(args, ["n", "alpha", "W", "order"]), rows, [], ("n", "value"))


def cmd_bernoulli_numbers(args) -> Outcome:
    alpha = as_rational(args.alpha)
    g = resolve_group(args, need=args.n + 1)
    rows = []
    for n in range(args.n + 1):
        if args.universal:
            value = universal_bernoulli_number(n, alpha, W=args.W)
        else:
            value = bernoulli_of_group(g, n, alpha)(0)
        rows.append({"n": n, "value": value})
    return Outcome("bernoulli numbers", _base_params(args, ["n", "alpha", "W", "order"]), rows, [], ("n", "value"))


def cmd_bernoulli_genus(args) -> Outcome:
    params = _base_params(args, ["kind", "n", "order"])
    if args.kind == "s":
        g = resolve_group(args, need=args.n + 2)
        values = s_sequence(g.characteristic_series, args.n)
        rows = [{"n": j, "value": values[j]} for j in range(1, args.n + 1)]
    else:
        if _group_spec_count(args):
            raise UsageError(f"--kind {args.kind} takes no group specification")
        rows = [{"n": n, "value": genus_polynomials(args.kind, n)} for n in range(args.n + 1)]
    return Outcome("bernoulli genus", params, rows, [], ("n", "value"))


# ---------------------------------------------------------------------
# congruence


def _order_for(n_max: int) -> int:
    return max(n_max + 1, 4)


def cmd_congruence_staudt(args) -> Outcome:
    W = args.W if args.W is not None else args.n_max
    verdicts = [von_staudt_check(n, W=W) for n in range(args.n_max + 1)]
    return Outcome("congruence staudt", {"n_max": args.n_max, "W": W}, [], verdicts)


def cmd_congruence_kummer(args) -> Outcome:
    for p in args.primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    verdicts = [kummer_check(n, p, W=args.W) for p in args.primes for n in range(2, args.n_max + 1)]
    params = {"n_max": args.n_max, "primes": ",".join(map(str, args.primes))}
    if args.W is not None:
        params["W"] = args.W
    return Outcome("congruence kummer", params, [], verdicts)


def _grid_params(args, keys):
    params = _base_params(args, keys)
    if args.ignore_hypotheses:
        params["ignore_hypotheses"] = True
    return params


def cmd_congruence_am(args) -> Outcome:
    g = resolve_group(args, need=_order_for(args.n_max))
    verdicts = am_scan(g, args.n_max, args.h_max, args.k_max, args.stop_on_first_failure, not args.ignore_hypotheses)
    return Outcome("congruence am", _grid_params(args, ["n_max", "h_max", "k_max", "order"]), [], verdicts)


def cmd_congruence_br(args) -> Outcome:
    g = resolve_group(args, need=_order_for(args.n_max))
    verdicts = br_scan(g, args.n_max, args.h_max, args.k_max, args.stop_on_first_failure, not args.ignore_hypotheses)
    return Outcome("congruence br", _grid_params(args, ["n_max", "h_max", "k_max", "order"]), [], verdicts)


def cmd_congruence_lemma4(args) -> Outcome:
    g = resolve_group(args, need=_order_for(args.n_max))
    verdicts = lemma4_scan(g, args.n_max, args.k_max, args.stop_on_first_failure, not args.ignore_hypotheses)
    return Outcome("congruence lemma4", _grid_params(args, ["n_max", "k_max", "order"]), [], verdicts)


def cmd_congruence_fermat(args) -> Outcome:
    g = resolve_group(args, need=_order_for(args.n_max))
    verdicts = []
    for n in range(1, args.n_max + 1):
        for s in range(1, args.s_max + 1):
            v = fermat_sum_check(g, n, s, enforce=not args.ignore_hypotheses)
            verdicts.append(v)
            if args.stop_on_first_failure and v.failed:
                break
    return Outcome("congruence fermat", _grid_params(args, ["n_max", "s_max", "order"]), [], verdicts)


def cmd_congruence_hb(args) -> Outcome:
    for p in args.primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    verdicts = [hermite_bachmann(n, p) for p in args.primes for n in range(2, args.n_max + 1)]
    return Outcome("congruence hb", {"n_max": args.n_max, "primes": ",".join(map(str, args.primes))}, [], verdicts)


def cmd_congruence_granville(args) -> Outcome:
    if _group_spec_count(args):
        if args.kind is not None:
            raise UsageError("give either --kind or a group specification")
        g = resolve_group(args, need=args.n_max + 1)
        seq: Callable[[int], CPoly] = lambda n: tilde_of_group(g, n)  # noqa: E731
        label = f"granville[{g.name}]"
    else:
        kind = args.kind or "alpha_tilde"
        if kind == "s":
            raise UsageError("--kind s is not a polynomial sequence")
        seq = lambda n: genus_polynomials(kind, n)  # noqa: E731
        label = f"granville[{kind}]"
    verdicts = granville_scan(seq, args.n_max, args.h_max, args.k_max, label, args.stop_on_first_failure)
    return Outcome("congruence granville", _base_params(args, ["kind", "n_max", "h_max", "k_max", "order"]), [], verdicts)


# ---------------------------------------------------------------------
# sequences


def _pair(args, need: int):
    if args.expr is not None:
        if args.g1 is not None or args.g2 is not None:
            raise UsageError("give either --expr or --g1/--g2")
        return None
    if args.g1 is None or args.g2 is None:
        raise UsageError("give --expr or both --g1 and --g2")
    order = args.order if args.order is not None else need
    if order < need:
        raise UsageError(f"--order {order} is too small here; need at least {need}")
    return catalog(args.g1, order), catalog(args.g2, order)


def cmd_sequence_numbers(args) -> Outcome:
    pair = _pair(args, args.count + 1)
    seq = nk_from_expr(parse(args.expr), args.count) if pair is None else nk_from_groups(*pair, args.count)
    rows = [{"k": k, "value": Fraction(v)} for k, v in enumerate(seq.terms, start=seq.start)]
    bad = [v for v in seq.terms if not isinstance(v, int)]
    verdict = CongruenceVerdict(
        "integral",
        {"source": seq.source, "count": args.count},
        HOLDS if not bad else FAILS,
        Fraction(0) if not bad else bad[0],
        seq.hypothesis,
    )
    params = {k: v for k, v in (("g1", args.g1), ("g2", args.g2), ("expr", args.expr), ("count", args.count)) if v is not None}
    lines = [f"source: {seq.source}", "terms: " + ", ".join(_text(v) for v in seq.terms)]
    if seq.hypothesis is not None:
        agree = ", ".join(f"p={p}:{'yes' if ok else 'no'}" for p, ok in seq.hypothesis.agreement.items())
        lines.append(f"pair hypotheses: c integral={seq.hypothesis.c_integral}; c_(p-1) agree mod p: {agree}")
    return Outcome("sequence numbers", params, rows, [verdict], ("k", "value"), None, lines)


def cmd_sequence_polys(args) -> Outcome:
    pair = _pair(args, args.n_max + 2)
    # the printed convention starts at the first nonzero polynomial
    span = args.n_max
    while True:
        if pair is None:
            polys = nk_polynomials_from_expr(parse(args.expr), span)
        else:
            if pair[0].order < span + 1:
                pair = (catalog(args.g1, span + 1), catalog(args.g2, span + 1))
            polys = nk_polynomials(pair[0], pair[1], span)
        first = next((i for i, p in enumerate(polys) if not p.is_zero()), None)
        if first is not None and first + args.n_max <= span:
            break
        if span > 256:
            raise UsageError("series vanishes to high order")
        span = span * 2 if first is None else first + args.n_max
    rows = [{"j": j, "k": first + j, "value": polys[first + j]} for j in range(args.n_max + 1)]
    params = {k: v for k, v in (("g1", args.g1), ("g2", args.g2), ("expr", args.expr), ("n_max", args.n_max)) if v is not None}
    return Outcome("sequence polys", params, rows, [], ("j", "k", "value"))


# ---------------------------------------------------------------------
# zeta


def _character(args) -> DirichletCharacter:
    if args.chi is None:
        raise UsageError("--char FILE is required")
    try:
        return DirichletCharacter.from_file(args.chi)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read character file {args.chi}: {exc}") from None


def _zeta_params(args, keys):
    params = _base_params(args, keys)
    if getattr(args, "chi", None) is not None:
        params["char"] = args.chi
    return params


def cmd_zeta_value(args) -> Outcome:
    g = resolve_group(args, need=max(args.m + 2, 4), zeta=True)
    a = as_rational(args.a)
    value = zeta_neg(g, args.m, a)
    return Outcome("zeta value", _zeta_params(args, ["m", "a", "order"]), [{"m": args.m, "a": a, "value": value}], [], ("m", "a", "value"))


def cmd_zeta_th3(args) -> Outcome:
    ns, hs, ks = args.n, args.h, args.k
    g = resolve_group(args, need=max(max(ns) + 1, 4), zeta=True)
    verdicts = [th3_check(g, n, h, k, strict=args.strict) for n in ns for h in hs for k in ks]
    params = _zeta_params(args, ["order"])
    params.update({"n": ",".join(map(str, ns)), "h": ",".join(map(str, hs)), "k": ",".join(map(str, ks)), "strict": args.strict})
    return Outcome("zeta th3", params, [], verdicts)


def cmd_zeta_chi(args) -> Outcome:
    chi = _character(args)
    g = resolve_group(args, need=max(max(args.n) + 1, 2), zeta=True)
    g = None if args.universal else g
    rows = [{"n": n, "value": chi_numbers(g, chi, n)} for n in args.n]
    params = _zeta_params(args, ["order"])
    params["n"] = ",".join(map(str, args.n))
    return Outcome("zeta chi", params, rows, [], ("n", "value"))


def cmd_zeta_l(args) -> Outcome:
    chi = _character(args)
    g = resolve_group(args, need=max(max(args.n) + 2, 4), zeta=True)
    rows = [{"n": n, "value": l_value_neg(g, chi, n)} for n in args.n]
    params = _zeta_params(args, ["order"])
    params["n"] = ",".join(map(str, args.n))
    return Outcome("zeta l", params, rows, [], ("n", "value"))


def cmd_zeta_th4(args) -> Outcome:
    chi = _character(args)
    g = resolve_group(args, need=max(max(args.n) + 2, 4), zeta=True)
    verdicts = [th4_check(g, chi, n, strict=args.strict) for n in args.n]
    params = _zeta_params(args, ["order"])
    params.update({"n": ",".join(map(str, args.n)), "strict": args.strict})
    return Outcome("zeta th4", params, [], verdicts)


# ---------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fglcalc", description="Exact formal group law computations.")
    parser.add_argument("--version", action="version", version=f"fglcalc {__version__}")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(sub, name, fn, help_text, q_flag="--char", universal=False, group=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if group:
            _group_flags(p, q_flag=q_flag, universal=universal)
        _common(p)
        p.set_defaults(func=fn)
        return p

    # fgl
    fgl = top.add_parser("fgl", help="logarithm, exponential and group law").add_subparsers(dest="sub", required=True)
    p = leaf(fgl, "show", cmd_fgl_show, "print F, G, c, gamma and the group law", universal=True)
    p.add_argument("--law-order", type=int, default=6, help="total degree of the printed law (default 6)")
    leaf(fgl, "axioms", cmd_fgl_axioms, "check unit, commutativity and associativity", universal=True)

    # bernoulli
    bern = top.add_parser("bernoulli", help="Bernoulli polynomials and numbers").add_subparsers(dest="sub", required=True)
    for name, fn, text in (
        ("poly", cmd_bernoulli_poly, "Bernoulli polynomials B_0..B_n"),
        ("numbers", cmd_bernoulli_numbers, "Bernoulli numbers B_0..B_n"),
    ):
        p = leaf(bern, name, fn, text, universal=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--alpha", default="1", help="order of the higher Bernoulli family (rational)")
        p.add_argument("--W", type=int, help="weight cap for --universal")
    p = leaf(bern, "genus", cmd_bernoulli_genus, "genus polynomial tables or s_n")
    p.add_argument("--kind", choices=GENUS_KINDS, required=True)
    p.add_argument("--n", type=int, required=True)

    # congruence
    cong = top.add_parser("congruence", help="congruence verifiers").add_subparsers(dest="sub", required=True)
    p = leaf(cong, "staudt", cmd_congruence_staudt, "universal von Staudt congruence", group=False)
    p.add_argument("--n-max", type=int, default=14)
    p.add_argument("--W", type=int)
    p = leaf(cong, "kummer", cmd_congruence_kummer, "universal Kummer congruence", group=False)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--primes", type=_int_list, default=[3, 5, 7])
    p.add_argument("--W", type=int)
    for name, fn, text in (
        ("am", cmd_congruence_am, "k^n (B_n(h/k) - B_n) in Z over a grid"),
        ("br", cmd_congruence_br, "generalized Bartz-Rutkowski congruence over a grid"),
    ):
        p = leaf(cong, name, fn, text)
        p.add_argument("--n-max", type=int, default=16)
        p.add_argument("--h-max", type=int, default=10)
        p.add_argument("--k-max", type=int, default=10)
    p = leaf(cong, "lemma4", cmd_congruence_lemma4, "sum_{m<n} C(n,m) k^m B_m in Z")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--k-max", type=int, default=10)
    p = leaf(cong, "fermat", cmd_congruence_fermat, "(s^n - 1) times the Staudt sum is integral")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--s-max", type=int, default=10)
    for name in ("am", "br", "lemma4", "fermat"):
        sp = cong.choices[name]
        sp.add_argument("--stop-on-first-failure", action="store_true")
        sp.add_argument("--ignore-hypotheses", action="store_true", help="evaluate even when the hypotheses fail")
    p = leaf(cong, "hb", cmd_congruence_hb, "Hermite-Bachmann binomial sums", group=False)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--primes", type=_int_list, default=[2, 3, 5, 7])
    p = leaf(cong, "granville", cmd_congruence_granville, "k^n P_n(h/k) in Z for a polynomial family")
    p.add_argument("--kind", choices=[k for k in GENUS_KINDS if k != "s"])
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--h-max", type=int, default=8)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--stop-on-first-failure", action="store_true")

    # sequence
    seq = top.add_parser("sequence", help="integer sequences from characteristic series").add_subparsers(dest="sub", required=True)
    for name, fn, text in (
        ("numbers", cmd_sequence_numbers, "N_k = 2 k! [t^k] f(t)"),
        ("polys", cmd_sequence_polys, "N_k(x) = 2 k! [t^k] f(t) e^(xt)"),
    ):
        p = leaf(seq, name, fn, text, group=False)
        p.add_argument("--g1", help="catalog group; f = t/G1 - t/G2")
        p.add_argument("--g2", help="catalog group")
        p.add_argument("--expr", help="f(t) as an expression")
    seq.choices["numbers"].add_argument("--count", type=int, default=10)
    seq.choices["polys"].add_argument("--n-max", type=int, default=4)

    # zeta
    zeta = top.add_parser("zeta", help="zeta values at non-positive integers").add_subparsers(dest="sub", required=True)
    p = leaf(zeta, "value", cmd_zeta_value, "zeta^G(-m, a)", q_flag="--q")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", required=True, help="positive rational")
    p = leaf(zeta, "th3", cmd_zeta_th3, "n k^n zeta^G(1-n, h/k) in Z", q_flag="--q")
    p.add_argument("--n", type=_int_list, required=True, help="integers, e.g. 3,5,7 or 3-7")
    p.add_argument("--h", type=_int_list, required=True)
    p.add_argument("--k", type=_int_list, required=True)
    p = leaf(zeta, "chi", cmd_zeta_chi, "Bernoulli chi-numbers", q_flag="--q", universal=True)
    p.add_argument("--n", type=_int_list, required=True)
    p = leaf(zeta, "l", cmd_zeta_l, "L(G, chi, 1-n)", q_flag="--q")
    p.add_argument("--n", type=_int_list, required=True)
    p = leaf(zeta, "th4", cmd_zeta_th4, "n N L(G, chi, 1-n) in Z[chi]", q_flag="--q")
    p.add_argument("--n", type=_int_list, required=True)
    for name in ("chi", "l", "th4"):
        zeta.choices[name].add_argument("--char", dest="chi", required=True, help="character table (JSON file)")
    for name in ("th3", "th4"):
        zeta.choices[name].add_argument("--strict", action="store_true", help="require c_(p-1) = 1 mod p for every p")
    return parser


def run(argv: Optional[Sequence[str]] = None):
    """Parse and execute; returns ``(outcome, args)``."""
    args = build_parser().parse_args(_merge_dash_values(list(sys.argv[1:] if argv is None else argv)))
    return args.func(args), args


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        out, args = run(argv)
        text = render(out, args.format)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, ValueError, KeyError, IndexError, ZeroDivisionError, SeriesError, GFExprError, CharacterError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"fglcalc: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAILED if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
