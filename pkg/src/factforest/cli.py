"""Command-line interface: ``factforest {build,verify,green,oracle,query,bench}``.

Exit codes: 0 on success, 1 when verification fails (or the bound is
exceeded under ``--enforce-bound``), 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .builder import build_forest, height_bound
from .errors import FactForestError
from .forest import forest_document, tree_from_dict, tree_to_dict, tree_to_dot, tree_to_text
from .green import compute_green, eggbox, j_order_dot
from .oracle import DEFAULT_MAX_LEN, min_height_forest
from .range_product import index_tree, query
from .rng import SplitMix64
from .semigroup import homomorphism_from_dict
from .verify import verify_valid
from .zoo import zoo

COMMANDS = ("build", "verify", "green", "oracle", "query", "bench")


class InputError(Exception):
    """Unreadable input; reported with exit status 2."""


@dataclass
class RunConfig:
    command: str
    hom: str | None = None
    zoo_name: str | None = None
    word: str | None = None
    word_file: str | None = None
    random_length: int | None = None
    seed: int | None = None
    forest: str | None = None
    ranges: list = field(default_factory=list)
    output_format: str = "json"
    enforce_bound: bool = False
    max_oracle_len: int = DEFAULT_MAX_LEN
    max_len: int = 8
    random_words: int = 10
    out_dir: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.random_length is not None and self.seed is None:
            raise ValueError("--random-length requires --seed")


def _read_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _load_phi(cfg):
    if cfg.zoo_name:
        z = zoo()
        if cfg.zoo_name not in z:
            raise InputError(f"unknown zoo semigroup {cfg.zoo_name!r}; choose from {', '.join(z)}")
        return z[cfg.zoo_name]
    if not cfg.hom:
        raise InputError("a homomorphism is required (--hom FILE or --zoo NAME)")
    doc = _read_json(cfg.hom)
    try:
        return homomorphism_from_dict(doc, os.path.dirname(os.path.abspath(cfg.hom)))
    except FactForestError as exc:
        raise InputError(f"{cfg.hom}: {exc}") from None


def _load_word(cfg, phi, fallback=None):
    if cfg.word is not None:
        w = cfg.word
    elif cfg.word_file is not None:
        try:
            with open(cfg.word_file) as fh:
                w = fh.read().strip()
        except OSError as exc:
            raise InputError(f"{cfg.word_file}: {exc.strerror}") from None
    elif cfg.random_length is not None:
        w = SplitMix64(cfg.seed).word(phi.alphabet, cfg.random_length)
    elif fallback is not None:
        w = fallback
    else:
        raise InputError("no word given (--word, --word-file or --random-length/--seed)")
    if not w:
        raise InputError("the word is empty")
    for pos, a in enumerate(w):
        if a not in phi.letter_image:
            raise InputError(f"word position {pos}: letter {a!r} is not in the alphabet")
    return w


def _emit(out, doc):
    out.write(json.dumps(doc, indent=2) + "\n")


def _cmd_build(cfg, out):
    phi = _load_phi(cfg)
    green = compute_green(phi.semigroup)
    w = _load_word(cfg, phi)
    tree = build_forest(phi, green, w)
    bound = height_bound(green, tree.image)
    if cfg.output_format == "dot":
        out.write(tree_to_dot(tree, phi.semigroup, w))
    elif cfg.output_format == "text":
        out.write(f"{tree_to_text(tree, phi.semigroup)}\nheight {tree.height} bound {bound}\n")
    else:
        _emit(out, forest_document(tree, phi, w, bound, cfg.seed))
    return 1 if cfg.enforce_bound and tree.height > bound else 0


def _load_forest(cfg, phi):
    if not cfg.forest:
        raise InputError("--forest FILE is required")
    doc = _read_json(cfg.forest)
    try:
        tree = tree_from_dict(doc, phi)
    except FactForestError as exc:
        raise InputError(f"{cfg.forest}: {exc}") from None
    word = _load_word(cfg, phi, fallback=doc.get("word") if isinstance(doc, dict) else None)
    return tree, word


def _cmd_verify(cfg, out):
    phi = _load_phi(cfg)
    green = compute_green(phi.semigroup)
    tree, w = _load_forest(cfg, phi)
    report = verify_valid(tree, phi, green, w)
    doc = {"tool_version": __version__, "seed": cfg.seed, "word": w}
    doc.update(report.to_dict())
    _emit(out, doc)
    ok = report.valid and (report.within_bound or not cfg.enforce_bound)
    return 0 if ok else 1


def _cmd_green(cfg, out):
    phi = _load_phi(cfg)
    s = phi.semigroup
    g = compute_green(s)
    if cfg.output_format == "dot":
        out.write(j_order_dot(s, g))
    else:
        doc = {"tool_version": __version__, "seed": cfg.seed}
        doc.update(eggbox(s, g))
        _emit(out, doc)
    return 0


def _cmd_oracle(cfg, out):
    phi = _load_phi(cfg)
    w = _load_word(cfg, phi)
    if len(w) > cfg.max_oracle_len:
        raise InputError(f"word length {len(w)} exceeds --max-oracle-len {cfg.max_oracle_len}")
    res = min_height_forest(phi, w, cfg.max_oracle_len)
    if cfg.output_format == "dot":
        out.write(tree_to_dot(res.witness, phi.semigroup, w))
        return 0
    _emit(out, {"tool_version": __version__, "seed": cfg.seed, "word": w,
                "min_height": res.min_height, "witness": tree_to_dict(res.witness, phi.semigroup)})
    return 0


def _parse_range(text):
    try:
        a, b = text.strip().split(":")
        return int(a), int(b)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected i:j") from None


def _cmd_query(cfg, out, stdin):
    phi = _load_phi(cfg)
    green = compute_green(phi.semigroup)
    tree, w = _load_forest(cfg, phi)
    report = verify_valid(tree, phi, green, w)
    if not report.valid:
        raise InputError(f"{cfg.forest}: not a valid forest for its word ({report.violations[:1]})")
    idx = index_tree(tree, w, phi.semigroup.table)
    ranges = [_parse_range(r) for r in cfg.ranges]
    if not ranges:
        ranges = [_parse_range(line) for line in stdin if line.strip()]
    names = phi.semigroup.elements
    for i, j in ranges:
        out.write(names[query(idx, i, j)] + "\n")
    return 0


def _cmd_bench(cfg, out):
    from .bench import run_bench, write_tsv

    seed = 1 if cfg.seed is None else cfg.seed
    report = run_bench(max_len=cfg.max_len, seed=seed, random_words=cfg.random_words,
                       random_length=cfg.random_length or 1000,
                       oracle_len=min(8, cfg.max_oracle_len))
    if cfg.out_dir:
        from .plotting import heights_figure

        os.makedirs(cfg.out_dir, exist_ok=True)
        with open(os.path.join(cfg.out_dir, "bench.json"), "w") as fh:
            json.dump(report, fh, indent=2)
        write_tsv(report, os.path.join(cfg.out_dir, "bench.tsv"))
        heights_figure(report, os.path.join(cfg.out_dir, "heights.png"))
    _emit(out, report)
    ok = all(r["all_valid"] and r["within_bound"] for r in report["rows"])
    return 0 if ok or not cfg.enforce_bound else 1


def run(cfg, out=None, stdin=None):
    """Dispatch one command; returns the exit status."""
    out = out or sys.stdout
    try:
        if cfg.command == "build":
            return _cmd_build(cfg, out)
        if cfg.command == "verify":
            return _cmd_verify(cfg, out)
        if cfg.command == "green":
            return _cmd_green(cfg, out)
        if cfg.command == "oracle":
            return _cmd_oracle(cfg, out)
        if cfg.command == "query":
            return _cmd_query(cfg, out, stdin or sys.stdin)
        return _cmd_bench(cfg, out)
    except (InputError, FactForestError) as exc:
        print(f"factforest {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


def _parser():
    p = argparse.ArgumentParser(prog="factforest", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=True):
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--hom", help="homomorphism JSON file")
        src.add_argument("--zoo", dest="zoo_name", help="built-in semigroup, e.g. Z2 or flip-flop")
        sp.add_argument("--seed", type=int)
        if word:
            ws = sp.add_mutually_exclusive_group()
            ws.add_argument("--word")
            ws.add_argument("--word-file")
            ws.add_argument("--random-length", type=int)

    sp = sub.add_parser("build", help="build a factorization tree")
    common(sp)
    sp.add_argument("--format", dest="output_format", choices=("json", "dot", "text"), default="json")
    sp.add_argument("--enforce-bound", action="store_true")

    sp = sub.add_parser("verify", help="check a forest JSON document")
    common(sp)
    sp.add_argument("--forest", required=True)
    sp.add_argument("--enforce-bound", action="store_true")

    sp = sub.add_parser("green", help="eggbox of Green's relations")
    common(sp, word=False)
    sp.add_argument("--format", dest="output_format", choices=("json", "dot"), default="json")

    sp = sub.add_parser("oracle", help="exact minimum height for a short word")
    common(sp)
    sp.add_argument("--max-oracle-len", type=int, default=DEFAULT_MAX_LEN)
    sp.add_argument("--format", dest="output_format", choices=("json", "dot"), default="json")

    sp = sub.add_parser("query", help="infix products through a forest")
    common(sp, word=False)
    sp.add_argument("--index", dest="forest", required=True, help="forest JSON (with its word)")
    sp.add_argument("--range", dest="ranges", action="append", default=[],
                    help="i:j, repeatable; without it ranges are read from stdin")

    sp = sub.add_parser("bench", help="sweep the built-in zoo")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--max-len", type=int, default=8)
    sp.add_argument("--random-words", type=int, default=10)
    sp.add_argument("--random-length", type=int, default=1000)
    sp.add_argument("--max-oracle-len", type=int, default=8)
    sp.add_argument("--out-dir", help="also write bench.json, bench.tsv and heights.png here")
    sp.add_argument("--enforce-bound", action="store_true")
    return p


def main(argv=None):
    ns = _parser().parse_args(argv)
    kwargs = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**kwargs)
    except ValueError as exc:
        print(f"factforest: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
