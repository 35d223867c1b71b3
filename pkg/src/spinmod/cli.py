"""Command-line front end.

Every subcommand prints plain text by default and a JSON object with
--json.  Partitions in JSON are strings in the same "9,6,4,3,1" form the
parsers accept.  Exit status: 0 on success, 1 on a domain error, 2 on a
usage error.
"""

import argparse
import json
import sys

from . import abacus, characters, classify, degrees, partitions, regdouble, rouquier
from .errors import SpinModError
from .partitions import format_partition, parse


def _p(lam):
    return format_partition(lam) if lam is not None else None


def _classify(args):
    lam = parse(args.partition)
    verdict = classify.spin_irreducible(lam)
    form = verdict.witness or classify.separated(lam)
    data = {
        "partition": _p(lam),
        "irreducible": verdict.irreducible,
        "case": verdict.case,
        "tau": _p(form.tau) if form else None,
        "alpha": _p(form.alpha) if form else None,
        "b": form.b if form else None,
        "dblreg": _p(regdouble.dblreg(lam)),
        "degree": degrees.spin_degree(lam),
    }
    return verdict.describe(), data


def _degree(args):
    lam = parse(args.partition)
    d = degrees.spin_degree(lam)
    return str(d), {"partition": _p(lam), "degree": d}


def _core2(args):
    lam = parse(args.partition)
    core, w = abacus.two_core(lam), abacus.two_weight(lam)
    return f"core=({core}) weight={w}", {"partition": _p(lam), "core": _p(core), "weight": w}


def _quotient(args):
    lam = parse(args.partition)
    q0, q1 = abacus.two_quotient(lam)
    core, w = abacus.two_core(lam), abacus.two_weight(lam)
    text = f"(({q0}),({q1})) core=({core}) weight={w}"
    data = {"partition": _p(lam), "quotient": [_p(q0), _p(q1)], "core": _p(core), "weight": w}
    return text, data


def _sign(args):
    lam = parse(args.partition)
    s = abacus.two_sign(lam)
    return f"{s:+d}", {"partition": _p(lam), "sign": s}


def _content(args):
    lam = parse(args.partition)
    c = abacus.two_content(lam)
    return f"zeros={c.zeros} ones={c.ones}", {"partition": _p(lam), "zeros": c.zeros, "ones": c.ones}


def _dblreg(args):
    lam = parse(args.partition)
    d = regdouble.dblreg(lam)
    return str(d), {"partition": _p(lam), "dblreg": _p(d)}


def _barcore(args):
    lam = parse(args.partition)
    core, w = regdouble.four_bar_core(lam), regdouble.four_bar_weight(lam)
    return f"core=({core}) weight={w}", {"partition": _p(lam), "core": _p(core), "weight": w}


def _block(args):
    lam = parse(args.partition)
    b = regdouble.spin_block(lam)
    rq = regdouble.is_rouquier(b)
    text = f"core=({b.core}) weight={b.weight}" + (" rouquier" if rq else "")
    data = {"partition": _p(lam), "core": _p(b.core), "weight": b.weight, "rouquier": rq}
    return text, data


def _branch(args):
    chi = characters.parse_char(args.label)
    if chi.is_brauer:
        if len(chi) != 1:
            raise SpinModError("Brauer branching takes a single label phi(mu)")
        lam = characters.brauer_max(chi.labels()[0].partition, args.i, args.dir)
        out = characters.FormalChar.of(characters.Brauer(lam))
    elif args.r is None:
        out = characters.max_op(args.i, args.dir, chi)
    else:
        out = characters.divided(args.i, args.r, args.dir, chi)
    return str(out), {"input": str(chi), "i": args.i, "r": args.r, "dir": args.dir, "result": str(out)}


def _nodes(nodes):
    return " ".join(f"({n.row},{n.col})" for n in nodes) or "-"


def _kleshchev(args):
    mu = parse(args.partition)
    k = characters.kleshchev(mu, args.i)
    e_max = characters.brauer_max(mu, args.i, "e")
    f_max = characters.brauer_max(mu, args.i, "f")
    text = "\n".join([
        f"signature: {characters.signature_text(k.signature)}",
        f"reduced: {characters.signature_text(k.reduced)}",
        f"normal: {_nodes(k.normal)}",
        f"conormal: {_nodes(k.conormal)}",
        f"e_max: {e_max}",
        f"f_max: {f_max}",
    ])
    data = {
        "partition": _p(mu), "i": args.i,
        "signature": characters.signature_text(k.signature),
        "reduced": characters.signature_text(k.reduced),
        "normal": [list(n) for n in k.normal],
        "conormal": [list(n) for n in k.conormal],
        "e_max": _p(e_max), "f_max": _p(f_max),
    }
    return text, data


def _matrix_json(m):
    return {
        "rows": [rouquier.format_label(r) for r in m.row_labels],
        "cols": [rouquier.format_label(c) for c in m.col_labels],
        "entries": [[int(x) for x in row] for row in m.entries.tolist()],
    }


def _rouquier(args):
    block = rouquier.RouquierBlock(parse(args.core), args.weight)
    if args.emit in ("psi", "omega") and (args.d or args.dbar):
        raise SpinModError("--d/--dbar are only used with --emit E, A or J")
    if args.emit == "psi":
        chars = {_p(mu): str(rouquier.psi(block, mu))
                 for mu in partitions.enumerate_partitions(args.weight)}
        text = "\n".join(f"psi^({mu}) = {c}" for mu, c in chars.items())
        return text, {"core": _p(block.core), "weight": args.weight, "psi": chars}
    if args.emit == "omega":
        m = rouquier.omega_spin_matrix(block)
        return m.to_text().rstrip("\n"), _matrix_json(m)
    d_default, dbar_default = (None, None)
    if not (args.d and args.dbar):
        d_default, dbar_default = rouquier.schur_algebra_matrices(args.weight)
    d = rouquier.load_matrix(args.d) if args.d else d_default
    dbar = rouquier.load_matrix(args.dbar) if args.dbar else dbar_default
    e, j, a = rouquier.assemble_E(block, d, dbar)
    m = {"E": e, "J": j, "A": a}[args.emit]
    return m.to_text().rstrip("\n"), _matrix_json(m)


def _verify(args):
    names = sorted(classify.SUITES) if args.name == "all" else [args.name]
    reports = [classify.verify_suite(n, args.max_n, args.seed) for n in names]
    text = "\n".join(r.summary() for r in reports)
    data = {
        "seed": args.seed,
        "passed": all(r.passed for r in reports),
        "suites": [{"name": r.name, "max_n": r.max_n, "checked": r.checked,
                    "passed": r.passed,
                    "failures": [[_p(lam), why] for lam, why in r.failures]}
                   for r in reports],
    }
    return text, data


def _residue(text):
    value = int(text)
    if value not in (0, 1):
        raise argparse.ArgumentTypeError("residue must be 0 or 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="spinmod", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def partition_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("partition")
        p.set_defaults(func=func)
        return p

    partition_cmd("classify", _classify, "is the 2-modular reduction of <lam> irreducible")
    partition_cmd("degree", _degree, "degree of the spin character <lam>")
    partition_cmd("core2", _core2, "2-core and 2-weight")
    partition_cmd("quotient", _quotient, "2-quotient, 2-core and 2-weight")
    partition_cmd("sign", _sign, "2-sign")
    partition_cmd("content", _content, "number of nodes of residue 0 and 1")
    partition_cmd("dblreg", _dblreg, "regularization of the doubled partition")
    partition_cmd("barcore", _barcore, "4-bar-core and 4-bar-weight")
    partition_cmd("block", _block, "2-block of the spin character <lam>")
    k = partition_cmd("kleshchev", _kleshchev, "i-signature, normal and conormal nodes")
    k.add_argument("--i", type=_residue, required=True)

    b = sub.add_parser("branch", parents=[common], help="apply e_i or f_i to a character")
    b.add_argument("label", help='e.g. "<11,9,7,5,4,1>" or "1*[3,1] + 2*[2,2]" or "phi(5,2)"')
    b.add_argument("--i", type=_residue, required=True)
    b.add_argument("--r", type=int, default=None, help="divided power; default is the maximal one")
    b.add_argument("--dir", choices=("e", "f"), default="e")
    b.set_defaults(func=_branch)

    r = sub.add_parser("rouquier", parents=[common], help="matrices and characters of a Rouquier block")
    r.add_argument("--core", required=True)
    r.add_argument("--weight", type=int, required=True)
    r.add_argument("--d", help="decomposition matrix of the classical Schur algebra")
    r.add_argument("--dbar", help="decomposition matrix of the quantized Schur algebra")
    r.add_argument("--emit", choices=("E", "A", "J", "psi", "omega"), default="E")
    r.set_defaults(func=_rouquier)

    v = sub.add_parser("verify", parents=[common], help="run consistency suites")
    v.add_argument("name", choices=sorted(classify.SUITES) + ["all"])
    v.add_argument("--max-n", type=int, default=16)
    v.add_argument("--seed", type=int, default=classify.DEFAULT_SEED)
    v.set_defaults(func=_verify)
    return parser


def run(argv=None, out=None, err=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text, data = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    if args.command == "verify" and not data["passed"]:
        return 1
    return 0


def main():
    sys.exit(run())
