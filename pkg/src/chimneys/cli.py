"""Command line interface: shadow, oracle, count, render, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chimney import Chimney
from .counting import count_grassmannian, count_iwahori, count_parahoric
from .gallery import minimal_gallery
from .jsonio import count_to_json, shadow_to_json
from .render import Scene, render_svg
from .shadow import DEFAULT_CAP, EnumerationCapExceeded, enumerate_pf_galleries, gallery_type_of, shadow, shadow_oracle
from .sweeps import SweepConfig, run_all
from .weyl import AffineWeylGroup, weyl_group


class InputError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _ints(flag: str, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise InputError(flag, "is required here")
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(flag, f"expected comma-separated integers, got {text!r}") from None


def _word(W: AffineWeylGroup, flag: str, text: str | None):
    """A word such as "0,1,2", "012" or "" (identity)."""
    if text is None:
        raise InputError(flag, "is required here")
    text = text.strip()
    if "," in text:
        letters = _ints(flag, text)
    elif all(c.isdigit() for c in text):
        letters = tuple(int(c) for c in text)
    else:
        raise InputError(flag, f"expected a word in the letters 0..{W.n}, got {text!r}")
    try:
        return W.from_word(letters)
    except ValueError as e:
        raise InputError(flag, str(e)) from None


def _face(W: AffineWeylGroup, flag: str, text: str | None) -> frozenset:
    if text is None or text.strip() in ("", "alcove"):
        return frozenset()
    if text.strip() == "vertex":
        return W.spherical
    T = frozenset(_ints(flag, text))
    if not T <= W.spherical:
        raise InputError(flag, f"face types are subsets of 1..{W.n}")
    return T


def _group(args) -> AffineWeylGroup:
    try:
        return weyl_group(args.type)
    except ValueError as e:
        raise InputError("--type", str(e)) from None


def _chimney(W: AffineWeylGroup, args) -> Chimney:
    J = W.spherical if args.J is None else frozenset(_ints("--J", args.J))
    y = W.identity if args.y is None else _word(W, "--y", args.y)
    try:
        return Chimney.make(W, J, y)
    except ValueError as e:
        raise InputError("--J", str(e)) from None


def _lattice_point(W: AffineWeylGroup, flag: str, text: str | None):
    v = _ints(flag, text)
    if len(v) != W.n:
        raise InputError(flag, f"expected {W.n} coordinates in the simple coroot basis")
    return v


def _problem(W: AffineWeylGroup, args):
    """(x, sigma, tau) from --lambda or from --x/--sigma/--tau."""
    if args.lam is not None:
        lam = _lattice_point(W, "--lambda", args.lam)
        dom = W.dominant(lam)
        return W.x_lambda(dom), W.spherical, W.spherical
    x = _word(W, "--x", args.x)
    sigma = _face(W, "--sigma", args.sigma)
    tau = _face(W, "--tau", args.tau)
    if not W.is_reduced(x, sigma, tau):
        rep = W.min_coset_rep(x, left=sigma, right=tau)
        word = ",".join(map(str, W.reduced_word(rep)))
        raise InputError("--x", f"x is not (W_sigma, W_tau)-reduced; use --x \"{word}\"")
    return x, sigma, tau


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_shadow(args) -> int:
    W = _group(args)
    c = _chimney(W, args)
    x, sigma, tau = _problem(W, args)
    result = shadow(W, x, sigma, tau, c)
    _emit(args, json.dumps(shadow_to_json(W, result, c, x, sigma, tau), indent=1) + "\n")
    return 0


def cmd_oracle(args) -> int:
    W = _group(args)
    c = _chimney(W, args)
    x, sigma, tau = _problem(W, args)
    try:
        result = shadow_oracle(W, x, sigma, tau, c, cap=args.cap)
    except EnumerationCapExceeded as e:
        raise InputError("--cap", str(e)) from None
    _emit(args, json.dumps(shadow_to_json(W, result, c, x, sigma, tau), indent=1) + "\n")
    return 0


def cmd_count(args) -> int:
    W = _group(args)
    c = _chimney(W, args)
    if args.kind == "iwahori":
        p = count_iwahori(W, _word(W, "--x", args.x), _word(W, "--z", args.z), c)
    elif args.kind == "parahoric":
        x, sigma, tau = _problem(W, args)
        p = count_parahoric(W, sigma, tau, x, _word(W, "--z", args.z), c)
    else:
        lam = _lattice_point(W, "--lambda", args.lam)
        if not W.is_dominant(lam):
            raise InputError("--lambda", f"lambda must be dominant, e.g. {','.join(map(str, W.dominant(lam)))}")
        p = count_grassmannian(W, lam, _lattice_point(W, "--mu", args.mu), c)
    _emit(args, json.dumps(count_to_json(p)) + "\n")
    return 0


def cmd_render(args) -> int:
    W = _group(args)
    if W.n != 2:
        raise InputError("--type", "rendering needs a rank 2 type")
    c = _chimney(W, args)
    x, sigma, tau = _problem(W, args)
    if args.galleries:
        try:
            result = shadow_oracle(W, x, sigma, tau, c, cap=args.cap)
        except EnumerationCapExceeded as e:
            raise InputError("--cap", str(e)) from None
        galleries = enumerate_pf_galleries(W, gallery_type_of(W, x, sigma, tau), c)
    else:
        result = shadow(W, x, sigma, tau, c)
        galleries = [minimal_gallery(W, x, sigma, tau)]
    scene = Scene(W, window=args.window, chimney=c, shadow=result, galleries=galleries)
    _emit(args, render_svg(scene))
    return 0


def cmd_verify(args) -> int:
    W = _group(args)
    cfg = SweepConfig(max_x_len=args.max_x_len, max_y_len=args.max_y_len, faces=args.faces)
    reports = run_all(W, cfg)
    for r in reports:
        print(r.line())
        for f in r.failures[:10]:
            print("  " + f)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chimneys", description="Shadows and double-coset counts in affine Weyl groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, problem=True):
        sp.add_argument("--type", default="A2", help="root system type, e.g. A2, C2, G2")
        sp.add_argument("--J", default=None, help='chimney subset, e.g. "1" or "1,2"; "" is J empty; omit for an alcove target')
        sp.add_argument("--y", default=None, help='chimney element as a word, e.g. "202"; default identity')
        sp.add_argument("--out", default=None, help="write output to this path")
        if problem:
            sp.add_argument("--lambda", dest="lam", default=None, help="coroot lattice point, e.g. 2,2 (vertex to vertex)")
            sp.add_argument("--x", default=None, help="gallery type as a word, e.g. 0121")
            sp.add_argument("--sigma", default=None, help='start face: "alcove", "vertex" or a subset such as "1"')
            sp.add_argument("--tau", default=None, help="end face, same format as --sigma")
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on gallery length")

    sp = sub.add_parser("shadow", help="shadow by recursion (JSON)")
    common(sp)
    sp.set_defaults(func=cmd_shadow)

    sp = sub.add_parser("oracle", help="shadow by enumeration, with multiplicities (JSON)")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("count", help="double-coset point count as a polynomial in q")
    common(sp)
    sp.add_argument("--kind", choices=("iwahori", "parahoric", "grassmannian"), default="iwahori")
    sp.add_argument("--z", default=None, help="target element as a word")
    sp.add_argument("--mu", default=None, help="target coroot lattice point (grassmannian)")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("render", help="SVG drawing of a rank 2 shadow")
    common(sp)
    sp.add_argument("--window", type=int, default=4)
    sp.add_argument("--galleries", action="store_true", help="draw every positively folded gallery")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="recursion vs oracle and count vs nonemptiness sweeps")
    sp.add_argument("--type", default="A2")
    sp.add_argument("--max-x-len", type=int, default=5)
    sp.add_argument("--max-y-len", type=int, default=3)
    sp.add_argument("--faces", choices=("alcove", "vertex", "both"), default="both")
    sp.set_defaults(func=cmd_verify)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
