"""Acceptance criteria 1-7.  Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the lines are also
repeated in an "acceptance criteria" section at the end of any pytest run.
"""

import time

from factforest.builder import build_forest
from factforest.bench import band_lower_bound_probe
from factforest.green import j_upper_set_size
from factforest.oracle import min_height_forest
from factforest.range_product import preprocess, query
from factforest.rng import SplitMix64
from factforest.semigroup import words
from factforest.verify import verify_valid

from conftest import ACCEPTANCE_LINES, GREEN, ZOO


def report(n, ok, detail, started, budget=None):
    took = time.perf_counter() - started
    timing = f"{took:.1f}s"
    if budget is not None:
        timing += f" (budget {budget}s{'' if took <= budget else ', over budget on this machine'})"
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  [{timing}]"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def check_word(phi, g, w, failures):
    tree = build_forest(phi, g, w)
    rep = verify_valid(tree, phi, g, w)
    n = phi.semigroup.size
    if not (rep.valid and rep.height <= rep.bound <= 3 * n):
        failures.append((phi.semigroup.name, w[:40], rep.height, rep.bound, rep.violations[:2]))
    return rep.height


def test_criterion_1_exhaustive_bound():
    t0 = time.perf_counter()
    failures, count, worst = [], 0, {}
    for name, phi in ZOO.items():
        g = GREEN[name]
        for w in words(phi.alphabet, 10):
            worst[name] = max(worst.get(name, 0), check_word(phi, g, w, failures))
            count += 1
    detail = f"{count} words of length <= 10, max heights {worst}"
    assert report(1, not failures, detail, t0, budget=120), failures[:5]


def test_criterion_2_random_bound():
    t0 = time.perf_counter()
    failures, worst = [], {}
    for k, (name, phi) in enumerate(ZOO.items()):
        g = GREEN[name]
        rng = SplitMix64(20_000 + k)
        for _ in range(100):
            w = rng.word(phi.alphabet, 10_000)
            worst[name] = max(worst.get(name, 0), check_word(phi, g, w, failures))
    detail = f"{100 * len(ZOO)} random words of length 10^4, max heights {worst}"
    assert report(2, not failures, detail, t0, budget=60), failures[:5]


def test_criterion_3_oracle_consistency():
    t0 = time.perf_counter()
    failures, count = [], 0
    for name, phi in ZOO.items():
        g = GREEN[name]
        for w in words(phi.alphabet, 6):
            res = min_height_forest(phi, w)
            built = build_forest(phi, g, w).height
            rep = verify_valid(res.witness, phi, g, w)
            if not (res.min_height <= built and rep.valid and rep.height == res.min_height):
                failures.append((name, w, res.min_height, built))
            count += 1
    detail = f"{count} words of length <= 6: oracle <= builder, witnesses valid"
    assert report(3, not failures, detail, t0, budget=300), failures[:5]


def test_criterion_4_specific_values():
    t0 = time.perf_counter()
    checks = {}
    phi, g = ZOO["trivial"], GREEN["trivial"]
    checks["trivial heights == 1 for lengths 2..200"] = all(
        build_forest(phi, g, "x" * n).height == 1 for n in range(2, 201))
    checks["Z2 gggg oracle == 2"] = min_height_forest(ZOO["Z2"], "gggg").min_height == 2
    ff, gf = ZOO["flip-flop"], GREEN["flip-flop"]
    s = ff.semigroup
    checks["flip-flop up(a) == 3"] = j_upper_set_size(gf, s.index("a")) == 3
    checks["flip-flop up(1) == 1"] = j_upper_set_size(gf, s.index("1")) == 1
    ok = all(checks.values())
    detail = ", ".join(f"{k}: {'ok' if v else 'NO'}" for k, v in checks.items())
    assert report(4, ok, detail, t0), checks


def test_criterion_5_green_invariants():
    t0 = time.perf_counter()
    failures = []
    for name, phi in ZOO.items():
        s, g = phi.semigroup, GREEN[name]
        n, t = s.size, s.table
        for x in range(n):
            for y in range(n):
                same_h = g.h_class[x] == g.h_class[y]
                if same_h != (g.r_class[x] == g.r_class[y] and g.l_class[x] == g.l_class[y]):
                    failures.append((name, "H != R meet L", x, y))
                xy = t[x][y]
                if not (g.leq_r(xy, x) and g.leq_l(xy, y)):
                    failures.append((name, "monotonicity", x, y))
        for j in set(g.j_class):
            members = [x for x in range(n) if g.j_class[x] == j]
            for r in {g.r_class[x] for x in members}:
                for l in {g.l_class[x] for x in members}:
                    cell = [x for x in members if g.r_class[x] == r and g.l_class[x] == l]
                    if len(cell) != g.j_class_hsize[j]:
                        failures.append((name, "eggbox", j, r, l))
        for h in set(g.h_class):
            hs = [x for x in range(n) if g.h_class[x] == h]
            idem = any(t[x][x] == x for x in hs)
            closed = any(g.h_class[t[a][b]] == h for a in hs for b in hs)
            if not (idem == closed == g.group_h[h]):
                failures.append((name, "group H-class", h))
    detail = f"{len(ZOO)} semigroups: H = R meet L, eggbox, group H-classes, monotonicity"
    assert report(5, not failures, detail, t0), failures[:5]


def test_criterion_6_range_products():
    t0 = time.perf_counter()
    failures, worst_ratio = [], 0.0
    for k, (name, phi) in enumerate(ZOO.items()):
        g = GREEN[name]
        rng = SplitMix64(60_000 + k)
        w = rng.word(phi.alphabet, 10_000)
        idx = preprocess(phi, g, w)
        imgs = phi.images(w)
        t = phi.semigroup.table
        for _ in range(1000):
            i, j = rng.range(len(w))
            acc = imgs[i]
            for x in imgs[i + 1:j]:
                acc = t[acc][x]
            counter = [0]
            got = query(idx, i, j, counter)
            limit = 4 * (idx.height + 1)
            worst_ratio = max(worst_ratio, counter[0] / limit)
            if got != acc or counter[0] > limit:
                failures.append((name, i, j, got, acc, counter[0], limit))
    detail = (f"{len(ZOO)} words of length 10^4, 1000 ranges each; "
              f"max multiplications / 4(h+1) = {worst_ratio:.2f}")
    assert report(6, not failures, detail, t0), failures[:5]


def test_criterion_7_band_probe_informational():
    t0 = time.perf_counter()
    probe = band_lower_bound_probe(8)
    ok = 1 <= probe["max_oracle_min_height"] <= 3 * probe["size"]
    detail = (f"informational: B(2,2) words <= 8, max oracle min-height "
              f"{probe['max_oracle_min_height']} (|S| = {probe['size']}, witness {probe['witness']!r})")
    assert report(7, ok, detail, t0), probe
