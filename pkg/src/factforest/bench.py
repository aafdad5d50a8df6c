"""Sweeps over the built-in zoo: observed tree heights against the 3|S| bound."""

from __future__ import annotations

import csv

from . import __version__
from .builder import build_forest
from .green import compute_green
from .oracle import min_height_forest
from .rng import SplitMix64
from .semigroup import words
from .verify import verify_valid
from .zoo import zoo

COLUMNS = ("semigroup", "size", "alphabet", "bound", "exhaustive_words", "exhaustive_max_height",
           "random_words", "random_length", "random_max_height", "all_valid", "within_bound")


def _sweep(phi, green, ws):
    count = worst = 0
    valid = within = True
    for w in ws:
        tree = build_forest(phi, green, w)
        rep = verify_valid(tree, phi, green, w)
        count += 1
        worst = max(worst, rep.height)
        valid &= rep.valid
        within &= rep.within_bound
    return count, worst, valid, within


def band_lower_bound_probe(max_len=8):
    """Largest oracle min-height over words of length <= max_len on B(2,2)."""
    phi = zoo()["B(2,2)"]
    best, witness = 0, None
    for w in words(phi.alphabet, max_len):
        h = min_height_forest(phi, w, max_len_guard=max_len).min_height
        if h > best:
            best, witness = h, w
    return {"semigroup": "B(2,2)", "size": phi.semigroup.size, "max_len": max_len,
            "max_oracle_min_height": best, "witness": witness}


def run_bench(max_len=8, seed=1, random_words=10, random_length=1000, oracle_len=8, only=None):
    rows = []
    for k, (name, phi) in enumerate(zoo().items()):
        if only and name not in only:
            continue
        green = compute_green(phi.semigroup)
        ex_n, ex_h, ex_valid, ex_within = _sweep(phi, green, words(phi.alphabet, max_len))
        rng = SplitMix64(seed * 1_000_003 + k)
        rw = (rng.word(phi.alphabet, random_length) for _ in range(random_words))
        r_n, r_h, r_valid, r_within = _sweep(phi, green, rw)
        rows.append({
            "semigroup": name,
            "size": phi.semigroup.size,
            "alphabet": "".join(phi.alphabet),
            "bound": 3 * phi.semigroup.size,
            "exhaustive_words": ex_n,
            "exhaustive_max_height": ex_h,
            "random_words": r_n,
            "random_length": random_length,
            "random_max_height": r_h,
            "all_valid": ex_valid and r_valid,
            "within_bound": ex_within and r_within,
        })
    report = {"tool_version": __version__, "seed": seed, "max_len": max_len, "rows": rows}
    if oracle_len:
        report["band_lower_bound_probe"] = band_lower_bound_probe(oracle_len)
    return report


def write_tsv(report, path):
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS, delimiter="\t")
        writer.writeheader()
        for row in report["rows"]:
            writer.writerow(row)
