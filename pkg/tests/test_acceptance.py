"""Acceptance criteria 1-10, each reported as one PASS/FAIL line.

Run under pytest (lines go straight to the terminal) or directly with
`python tests/test_acceptance.py`.
"""

import time

import pytest

from qkflag import suites


def _run(name, **params):
    return suites.run_suite(name, **params)


def _select(reports, prefixes):
    out = []
    for r in reports:
        for label, ok, cex in r.checks:
            if any(label.startswith(p) for p in prefixes):
                out.append((f"{r.suite}{r.params} {label}", ok, cex))
    return out


def crit_qbg_label_increasing():
    t = time.perf_counter()
    reps = [_run("qbg-li", n=n) for n in (1, 2, 3)]
    dt = time.perf_counter() - t
    rows = [(f"{r.suite}{r.params} {lab}", ok, c) for r in reps for lab, ok, c in r.checks]
    rows.append(("n=3 has >= 3 orders", len(suites.orders_for(3)) >= 3, None))
    rows.append((f"runtime {dt:.2f}s < 10s", dt < 10, dt))
    return rows


def crit_tilted_bounds():
    return [(f"tilted n={n} {lab}", ok, c) for n in (1, 2, 3) for lab, ok, c in _run("tilted-bounds", n=n).checks]


def crit_mixed_consistency():
    reps = [_run("qls", n=n, tcap=2) for n in (1, 2, 3)]
    return _select(reps, ("equivariant=z2", "injective"))


def crit_walk_forms():
    reps = [_run("walks", n=n) for n in (1, 2, 3, 4)]
    return _select(reps, ("walk-forms",))


def crit_inverse_chevalley():
    reps = [_run("walks", n=n) for n in (1, 2, 3, 4)]
    return _select(reps, ("inverse-chevalley", "next-prefix"))


def crit_shift_chain():
    t = time.perf_counter()
    reps = [_run("ffn1", n=n) for n in (1, 2, 3, 4)]
    reps.append(_run("telescoping", n=6))
    reps += [_run("eh-recurrence", n=n) for n in range(1, 7)]
    dt = time.perf_counter() - t
    rows = [(f"{r.suite}{r.params} {lab}", ok, c) for r in reps for lab, ok, c in r.checks]
    rows.append((f"runtime {dt:.2f}s < 60s", dt < 60, dt))
    return rows


def crit_relation():
    reps = [_run("rel", n=n, cap=4) for n in (1, 2, 3, 4)]
    return [(f"{r.suite}{r.params} {lab}", ok, c) for r in reps for lab, ok, c in r.checks]


def crit_freeness():
    reps = [_run("freeness", n=n, mode="exact") for n in (1, 2)]
    reps.append(_run("freeness", n=3, mode="modp", seeds=[0, 1, 2]))
    rows = [(f"{r.suite}{r.params} {lab}", ok, c) for r in reps for lab, ok, c in r.checks]
    rows.append(("three modp seeds", sum(1 for lab, _, _ in reps[-1].checks if lab.endswith(" rank")) == 3, None))
    return rows


def crit_grothendieck_quantization():
    reps = [_run("groth", n=1, mode="exact"), _run("groth", n=2, mode="exact"), _run("groth", n=3, mode="modp")]
    rows = [(f"{r.suite}{r.params} {lab}", ok, c) for r in reps for lab, ok, c in r.checks]
    rows.append(("dominant closed form covers S_4", any("S_4" in lab for lab, _, _ in reps[0].checks), None))
    rows.append(("quantized membership checked", any("Q:" in lab for lab, _, _ in rows), None))
    return rows


def crit_line_bundle():
    return [(f"line-bundle n={n} {lab}", ok, c) for n in (1, 2) for lab, ok, c in _run("ls0", n=n).checks]


CRITERIA = [
    (1, "QBG label-increasing uniqueness", crit_qbg_label_increasing),
    (2, "tilted-Bruhat min/max = up/dn", crit_tilted_bounds),
    (3, "mixed expansion consistency and injectivity", crit_mixed_consistency),
    (4, "quantum walk classification", crit_walk_forms),
    (5, "inverse Chevalley reconstruction", crit_inverse_chevalley),
    (6, "shift-operator identity chain", crit_shift_chain),
    (7, "relation reduces to generators", crit_relation),
    (8, "quotient freeness and classical limit", crit_freeness),
    (9, "Grothendieck polynomials and quantization", crit_grothendieck_quantization),
    (10, "classical Grothendieck representatives", crit_line_bundle),
]


def evaluate(fn):
    rows = fn()
    failures = [(lab, cex) for lab, ok, cex in rows if not ok]
    return bool(rows) and not failures, len(rows), failures


def _line(num, title, ok, count, failures):
    tail = "" if ok else f"  first failure: {failures[0] if failures else 'no checks ran'}"
    return f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} ({count} checks){tail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, count, failures = evaluate(fn)
    with capsys.disabled():
        print("\n" + _line(num, title, ok, count, failures))
    assert ok, failures[:3]


if __name__ == "__main__":
    for num, title, fn in CRITERIA:
        print(_line(num, title, *evaluate(fn)))
