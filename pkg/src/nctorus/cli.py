"""Command-line entry point: verify, dims, pair, reconcile."""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable, List, Tuple

from . import complexes, pairing
from .cocycles import catalog as cocycle_catalog, dual_action, verify_membership
from .crossed import CATALOG, CrossedElement, build_projection, cross_mul, is_projection, spec
from .pairing import GAMMAS
from .torus import LABELS, TorusElement, act, elem_mul, group

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _window(text):
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be an integer, got {text!r}")
    if r < 3:
        raise argparse.ArgumentTypeError(f"window must be at least 3, got {r}")
    return r


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gamma", choices=GAMMAS + ("all",), default="all")
    common.add_argument("--window", type=_window, default=6)
    common.add_argument("--format", choices=sorted(pairing.EMITTERS), default="markdown")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, default=Path("."))
    common.add_argument("--numeric-check", action="store_true")
    p = argparse.ArgumentParser(prog="nctorus", description="Exact checks for noncommutative torus orbifolds.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run the exact verification suite")
    sub.add_parser("dims", parents=[common], help="cohomology dimensions against the printed values")
    sub.add_parser("pair", parents=[common], help="write the index tables")
    sub.add_parser("reconcile", parents=[common], help="write the cell-by-cell comparison")
    return p


def _gammas(cfg) -> List[str]:
    return list(GAMMAS) if cfg.gamma == "all" else [cfg.gamma]


def _header(gamma) -> List[str]:
    conv = pairing.conventions(gamma)
    return [f"# {gamma}"] + [f"#   {k}: {v}" for k, v in conv.items()]


# verify


def _random_torus(rng, size=3) -> TorusElement:
    return complexes.random_functional(rng, size=size, radius=2)


def _random_crossed(rng, sp) -> CrossedElement:
    return CrossedElement(sp, {k: _random_torus(rng, 2) for k in rng.sample(range(sp.N), 2)})


def _checks(gamma, cfg, rng) -> List[Tuple[str, Callable[[], bool]]]:
    sp = spec(gamma)
    checks = []

    def assoc_torus():
        for _ in range(20):
            a, b, c = (_random_torus(rng) for _ in range(3))
            if elem_mul(elem_mul(a, b), c) != elem_mul(a, elem_mul(b, c)):
                return False
        return True

    def assoc_crossed():
        for _ in range(10):
            a, b, c = (_random_crossed(rng, sp) for _ in range(3))
            if cross_mul(cross_mul(a, b), c) != cross_mul(a, cross_mul(b, c)):
                return False
        return True

    def automorphism():
        for lab in LABELS:
            g = group(lab)
            a, b = _random_torus(rng), _random_torus(rng)
            if act(g, a * b) != act(g, a) * act(g, b):
                return False
        return True

    def sigma_order():
        xs = [_random_torus(rng), TorusElement.monomial((1, 0)), TorusElement.monomial((0, 1))]
        return all(_sigma_pow(sp, x, sp.N) == x for x in xs)

    checks += [
        (f"{gamma}: torus product associative", assoc_torus),
        (f"{gamma}: crossed product associative", assoc_crossed),
        (f"{gamma}: action is an automorphism", automorphism),
        (f"{gamma}: sigma^{sp.N} = id", sigma_order),
    ]
    for name in CATALOG[gamma]:
        checks.append((f"{gamma}: {name} is a projection", lambda name=name: is_projection(build_projection(gamma, name))[0]))

    def complex_identity():
        for lab in complexes.GAMMA_TWISTS[gamma]:
            tw = complexes.TWISTS[lab]
            for _ in range(10):
                s1, s2 = complexes.alpha1(tw, complexes.random_functional(rng))
                if not complexes.alpha2(tw, s1, s2).is_zero():
                    return False
        return True

    checks.append((f"{gamma}: alpha2 o alpha1 = 0", complex_identity))
    for c in cocycle_catalog(gamma):
        checks.append((f"{gamma}: {c.name} satisfies its recurrences", lambda c=c: verify_membership(c)))
    gen = group(pairing_generator(gamma))
    fam = cocycle_catalog(gamma)

    def action_order():
        for c in fam:
            x, total = c, None
            for _ in range(gen.order()):
                s, name = dual_action(gen, x, fam)
                total = s if total is None else total * s
                x = next(f for f in fam if f.name == name)
            if x.name != c.name or total != total.one():
                return False
        return True

    checks.append((f"{gamma}: dual action has the group's order", action_order))
    for lab in complexes.GAMMA_TWISTS[gamma]:
        tw = complexes.TWISTS[lab]
        checks.append((
            f"{gamma}: H0 count for twist {lab} equals the catalog family at R={cfg.window}",
            lambda tw=tw: complexes.invariant_dim(gamma, tw, R=cfg.window) is not None,
        ))
    if cfg.numeric_check:
        from .numeric import cross_validate, sample_theta

        checks.append((
            f"{gamma}: numeric shadow agrees with exact cells",
            lambda: all(c.ok for c in cross_validate(gamma, sample_theta(cfg.seed))),
        ))
    return checks


def _sigma_pow(sp, x, n):
    for _ in range(n):
        x = act(sp.conj, x)
    return x


def pairing_generator(gamma):
    from .cocycles import GENERATOR

    return GENERATOR[gamma]


def cmd_verify(cfg, out=None) -> int:
    out = out or sys.stdout
    rng = random.Random(cfg.seed)
    status = EXIT_OK
    for gamma in _gammas(cfg):
        print("\n".join(_header(gamma)), file=out)
        passed = projections = 0
        for name, fn in _checks(gamma, cfg, rng):
            try:
                ok = bool(fn())
                err = ""
            except Exception as exc:  # a raised check is a failed check
                ok, err = False, f" ({type(exc).__name__}: {exc})"
            print(f"{'ok  ' if ok else 'FAIL'} {name}{err}", file=out)
            if ok:
                passed += 1
                projections += name.endswith("is a projection")
            elif status == EXIT_OK:
                status, first = EXIT_FAIL, name
        print(f"{gamma}: {projections}/{len(CATALOG[gamma])} projections verified, {passed} checks passed", file=out)
    if status != EXIT_OK:
        print(f"first failure: {first}", file=out)
    return status


# dims


def _dims_markdown(rep) -> str:
    lines = ["| twist | H0 comps | H0 inv | H1 solved | H1 inv | H2 comps | H2 inv |", "|---|---|---|---|---|---|---|"]
    for r in rep.rows:
        solved = "-" if r.h1_solved[1] == 0 else f"{r.h1_solved[0]}/{r.h1_solved[1]}"
        lines.append(
            f"| {r.twist} | {r.h0_count} | {r.h0_invariant} | {solved} | {r.h1_invariant} | {r.h2_count} | {r.h2_invariant} ({r.h2_source}) |"
        )
    lines += ["", "| quantity | computed | printed |", "|---|---|---|"]
    for k, v in rep.dims.items():
        lines.append(f"| {k} | {v} | {rep.printed[k]} |")
    return "\n".join(lines) + "\n"


def cmd_dims(cfg, out=None) -> int:
    out = out or sys.stdout
    status = EXIT_OK
    blobs = []
    for gamma in _gammas(cfg):
        rep = complexes.assemble_dims(gamma, window=cfg.window, seed=cfg.seed)
        if not rep.agrees():
            status = EXIT_FAIL
        if cfg.format == "json":
            blobs.append(rep.to_json())
        else:
            print("\n".join(_header(gamma)), file=out)
            print(_dims_markdown(rep), file=out)
    if blobs:
        print(json.dumps(blobs, indent=2), file=out)
    return status


# pair / reconcile


def cmd_pair(cfg, out=None) -> int:
    out = out or sys.stdout
    cfg.out.mkdir(parents=True, exist_ok=True)
    emit, ext = pairing.EMITTERS[cfg.format]
    status = EXIT_OK
    for gamma in _gammas(cfg):
        tab = pairing.generate_table(gamma)
        body = emit(tab)
        if cfg.format == "markdown":
            body = "\n".join(_header(gamma)) + "\n\n" + body
        elif cfg.format == "csv":
            body = "".join(line + "\n" for line in _header(gamma)) + body
        path = cfg.out / f"{gamma}-table.{ext}"
        path.write_text(body, encoding="utf-8")
        print(f"{gamma}: {tab.shape[0]}x{tab.shape[1]} table -> {path}", file=out)
        if cfg.numeric_check:
            status = max(status, _numeric(gamma, cfg, tab, out))
    return status


def _numeric(gamma, cfg, tab, out) -> int:
    from .numeric import cross_validate, max_error, sample_theta

    theta = sample_theta(cfg.seed)
    cells = cross_validate(gamma, theta, tab)
    bad = [c for c in cells if not c.ok]
    print(f"{gamma}: numeric check at theta={theta:.12f}: {len(cells) - len(bad)}/{len(cells)} cells, max error {max_error(cells):.2e}", file=out)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_reconcile(cfg, out=None) -> int:
    out = out or sys.stdout
    cfg.out.mkdir(parents=True, exist_ok=True)
    status = EXIT_OK
    for gamma in _gammas(cfg):
        rep = pairing.reconcile(gamma)
        path = cfg.out / f"{gamma}-reconcile.json"
        path.write_text(json.dumps(rep.to_json(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        print("\n".join(_header(gamma)), file=out)
        print(f"{gamma}: {len(rep.cells)} cells {rep.counts()} -> {path}", file=out)
        for line in rep.diff_lines():
            print("  " + line, file=out)
        if rep.strict_failures():
            status = EXIT_FAIL
            for c in rep.strict_failures():
                print(f"  strict cell differs: {c.row}/{c.column}", file=out)
    return status


COMMANDS = {"verify": cmd_verify, "dims": cmd_dims, "pair": cmd_pair, "reconcile": cmd_reconcile}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        cfg = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
