"""Command-line front end: build oracles from ideal files, run the
reconstructions and attacks, and emit the documented text formats.

Exit codes: 0 success, 1 math-layer error, 2 usage or parse error. All
randomness flows from --seed, so identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import crypto, forge
from .errors import ParseError
from .nc_polynomials import overlap_check, parse_free_file, render_free_file
from .oracle import CanOracle
from .peeling import covering_basis
from .polynomials import (
    Polynomial,
    normal_form,
    parse_ideal_file,
    parse_polynomial,
    render_ideal_file,
    s_polynomial,
)
from .staircase import brute_force_generators, reconstruct, render_result
from .terms import TermOrder
from .words import WordOrder


def _emit(text: str, out_path):
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_ideal(path, order_override=None, p_override=None):
    n, p, order, polys = parse_ideal_file(Path(path).read_text())
    if p_override:
        from .field import validate_prime

        p = validate_prime(p_override)
        polys = [Polynomial(n, p, dict(f.items())) for f in polys]
    if order_override:
        order = TermOrder(order_override)
    return n, p, order, polys


def _load_free(path):
    return parse_free_file(Path(path).read_text())


def _cmd_recon(args) -> int:
    n, p, order, polys = _load_ideal(args.ideal, args.order, args.p)
    oracle = CanOracle.commutative(polys, order, n=n, p=p)
    res = reconstruct(oracle, n, args.bound, binary=args.binary_search)
    _emit(render_result(res), args.out)
    if args.queries:
        print(f"queries {oracle.queries}")
    return 0


def _cmd_nc_recon(args) -> int:
    n, p, basis = _load_free(args.ideal)
    pn, pp, publics = _load_free(args.public)
    if (pn, pp) != (n, p):
        raise ValueError("public file and private file use different algebras")
    oracle = CanOracle.noncommutative(basis)
    trace: list[str] = []
    h = covering_basis(oracle, publics, trace=trace)
    lines = [render_free_file(h, n, p).rstrip("\n")]
    lines.extend(f"# {line}" for line in trace)
    _emit("\n".join(lines) + "\n", args.out)
    if args.queries:
        print(f"queries {oracle.queries}")
    return 0


def _cmd_forge(args) -> int:
    n, p, order, polys = _load_ideal(args.j, args.order, args.p)
    pair = forge.build_counterexample(polys, order, args.delta)
    if args.out:
        stem = Path(args.out)
        Path(f"{stem}.shifted.ideal").write_text(
            render_ideal_file(pair.shifted_basis.elements, order, n, p)
        )
        Path(f"{stem}.extended.ideal").write_text(
            render_ideal_file(pair.extended_basis.elements, order, n, p)
        )
    print(f"agree degree {pair.agree_degree}")
    print(f"cap element {pair.cap_poly.to_text(order)}")
    print(f"extended set is a Groebner basis: {pair.extended_is_groebner}")
    print(f"closed form matches: {pair.closed_form_matches}")
    if args.demo:
        demo = forge.demonstrate_bound_necessity(pair)
        sys.stdout.write(forge.render_demo(demo))
    return 0


def _cmd_keygen(args) -> int:
    n, p, order, polys = _load_ideal(args.ideal, args.order, args.p)
    rng = random.Random(args.seed)
    keys = crypto.keygen(
        polys, order, args.public_count, args.noise_degree, args.message_terms, rng
    )
    Path(args.out_private).write_text(
        render_ideal_file(keys.basis.elements, keys.basis.order, n, p)
    )
    Path(args.out_public).write_text(crypto.render_public_key(keys.public))
    print(f"wrote {args.out_private} and {args.out_public}")
    return 0


def _cmd_encrypt(args) -> int:
    pk = crypto.parse_public_key(Path(args.public).read_text())
    msg = parse_polynomial(args.message, pk.n, pk.p)
    rng = random.Random(args.seed)
    c = crypto.encrypt(pk, msg, rng)
    _emit(crypto.render_ciphertext(c, pk.n, pk.p), args.out)
    return 0


def _cmd_decrypt(args) -> int:
    n, p, order, polys = _load_ideal(args.private)
    cipher = crypto.parse_ciphertext(Path(args.cipher).read_text())
    oracle = CanOracle.commutative(polys, order, n=n, p=p)
    out = crypto.decrypt(oracle, cipher)
    print(out.to_text(order))
    if args.queries:
        print(f"queries {oracle.queries}")
    return 0


def _cmd_attack(args) -> int:
    n, p, order, polys = _load_ideal(args.private)
    pk = crypto.parse_public_key(Path(args.public).read_text())
    oracle = CanOracle.commutative(polys, order, n=n, p=p)
    result = crypto.attack_commutative(oracle, pk, bound=args.bound)
    _emit(render_result(result.staircase), args.out)
    if args.queries:
        print(f"queries {oracle.queries}")
    return 0


def _cmd_nc_probe(args) -> int:
    n, p, basis = _load_free(args.private)
    pn, pp, publics = _load_free(args.public)
    if (pn, pp) != (n, p):
        raise ValueError("public file and private file use different algebras")
    oracle = CanOracle.noncommutative(basis)
    rng = random.Random(args.seed)
    report = crypto.nc_attack_probe(oracle, publics, args.trials, rng)
    print(
        f"trials {report.trials} successes {report.successes}"
        f" failures {report.failures} basis {report.basis_size}"
    )
    return 0


def _cmd_verify_gb(args) -> int:
    text = Path(args.ideal).read_text()
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    ok = True
    if head == "free":
        n, p, polys = parse_free_file(text)
        order = WordOrder()
        monic = [g.monic(order) for g in polys if not g.is_zero()]
        ok = overlap_check(monic, order)
        print(f"ambiguities resolve: {ok}")
    else:
        n, p, order, polys = _load_ideal(args.ideal, args.order, args.p)
        elems = [g for g in polys if not g.is_zero()]
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                r = normal_form(s_polynomial(elems[i], elems[j], order), elems, order)
                line = "0" if r.is_zero() else r.to_text(order)
                state = "ok" if r.is_zero() else "remainder"
                print(f"pair ({i},{j}): {state} {line}")
                if not r.is_zero():
                    ok = False
    return 0 if ok else 1


def _cmd_bench_queries(args) -> int:
    n, p, order, polys = _load_ideal(args.ideal, args.order, args.p)
    oracle = CanOracle.commutative(polys, order, n=n, p=p)
    res = reconstruct(oracle, n, args.bound)
    brute_oracle = oracle.fresh_copy()
    brute = brute_force_generators(brute_oracle, n, args.bound)
    print(f"reconstruct queries {res.queries_used}")
    print(f"brute force queries {brute_oracle.queries}")
    print(f"agree {res.generators == frozenset(brute)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="escalier",
        description="staircase reconstruction from canonical-form oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, out=True, queries=True, p=True, order=False):
        if out:
            sp.add_argument("--out", help="output file (default stdout)")
        if queries:
            sp.add_argument("--queries", action="store_true", help="print the ledger")
        if p:
            sp.add_argument("--p", type=int, help="reinterpret coefficients mod this prime")
        if order:
            sp.add_argument(
                "--order", choices=["lex", "deglex", "degrevlex"], help="override the file order"
            )

    sp = sub.add_parser("recon", help="reconstruct staircase generators")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--binary-search", action="store_true")
    common(sp, order=True)
    sp.set_defaults(handler=_cmd_recon)

    sp = sub.add_parser("nc-recon", help="free-algebra covering basis")
    sp.add_argument("--ideal", required=True, help="private verified basis file")
    sp.add_argument("--public", required=True, help="public polynomials file")
    common(sp, p=False)
    sp.set_defaults(handler=_cmd_nc_recon)

    sp = sub.add_parser("forge", help="build the bound-necessity ideal pair")
    sp.add_argument("--j", required=True, help="ideal file for the base ideal")
    sp.add_argument("--delta", type=int, required=True, help="agreement degree")
    sp.add_argument("--demo", action="store_true", help="run both reconstructions")
    common(sp, queries=False, order=True)
    sp.set_defaults(handler=_cmd_forge)

    sp = sub.add_parser("keygen", help="generate a key pair")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--public-count", type=int, default=2)
    sp.add_argument("--noise-degree", type=int, default=1)
    sp.add_argument("--message-terms", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-private", required=True)
    sp.add_argument("--out-public", required=True)
    common(sp, out=False, queries=False, order=True)
    sp.set_defaults(handler=_cmd_keygen)

    sp = sub.add_parser("encrypt", help="encrypt a message polynomial")
    sp.add_argument("--public", required=True)
    sp.add_argument("--message", required=True)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, queries=False, p=False)
    sp.set_defaults(handler=_cmd_encrypt)

    sp = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    sp.add_argument("--private", required=True)
    sp.add_argument("--cipher", required=True)
    common(sp, out=False, p=False)
    sp.set_defaults(handler=_cmd_decrypt)

    sp = sub.add_parser("attack", help="reconstruct the basis via the oracle")
    sp.add_argument("--private", required=True, help="builds the decryption oracle")
    sp.add_argument("--public", required=True)
    sp.add_argument("--bound", type=int, help="default: the public degree cap")
    common(sp, p=False)
    sp.set_defaults(handler=_cmd_attack)

    sp = sub.add_parser("nc-probe", help="free-algebra decryption probe")
    sp.add_argument("--private", required=True)
    sp.add_argument("--public", required=True)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, out=False, queries=False, p=False)
    sp.set_defaults(handler=_cmd_nc_probe)

    sp = sub.add_parser("verify-gb", help="check the Groebner property")
    sp.add_argument("--ideal", required=True)
    common(sp, out=False, queries=False, order=True)
    sp.set_defaults(handler=_cmd_verify_gb)

    sp = sub.add_parser("bench-queries", help="reconstruction vs brute force")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--bound", type=int, required=True)
    common(sp, out=False, queries=False, order=True)
    sp.set_defaults(handler=_cmd_bench_queries)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
