"""Acceptance suite: one line per criterion, all comparisons exact.

Each criterion collects :class:`dgoperads.checks.CheckResult` objects, prints
``criterion N: PASS|FAIL`` with a short summary, records the line for the
terminal summary, and then asserts.  Run directly with ``python
tests/test_acceptance.py`` to get only the eight lines.
"""

import time

import pytest

from dgoperads import checks

LINES: dict[int, str] = {}

TITLES = {
    1: "dg-operad axioms (pi <= 6, pasc <= 7)",
    2: "presentation dimensions",
    3: "relations hold in the explicit models",
    4: "Koszul dual relations span the orthogonal complement",
    5: "integral homology",
    6: "generating series",
    7: "morphisms, squares, degree zero, row exactness",
    8: "torsion-free integral quotients",
}


def record(number: int, results: list) -> None:
    failed = [r for r in results if r.failed]
    status = "FAIL" if failed else "PASS"
    conj = sum(r.status == checks.CONJ_PASS for r in results)
    secs = sum(r.elapsed_ms for r in results) / 1000
    tail = f"{len(results) - len(failed)}/{len(results)} checks"
    if conj:
        tail += f", {conj} conjectural"
    if failed:
        tail += "; failing: " + ", ".join(f"{r.check}{r.params or ''}" for r in failed)
    line = f"criterion {number}: {status}  {TITLES[number]}  [{tail}; {secs:.1f} s]"
    LINES[number] = line
    print(line)
    assert not failed, line


@pytest.mark.slow
def test_criterion_1_axioms():
    record(1, [checks.axioms("pi", 6), checks.axioms("pasc", 7)])


@pytest.mark.slow
def test_criterion_2_presentations():
    bounds = {"pi": 5, "pasc": 6, "kprime": 5, "trias": 5, "coprod": 4, "lambda": 4}
    record(2, [checks.presentation_dims(name, n) for name, n in bounds.items()])


def test_criterion_3_relations():
    record(3, [checks.relations_hold(name) for name in ("pi", "pasc", "trias")])


def test_criterion_4_duality():
    record(4, [checks.duality(pair) for pair in checks.ALL_PAIRS])


@pytest.mark.slow
def test_criterion_5_homology():
    results = [checks.homology_check("pi", n) for n in range(1, 6)]
    results += [checks.homology_check("pasc", n) for n in range(1, 8)]
    results += [checks.homology_check("kprime", n) for n in range(1, 6)]
    results += [checks.homology_check(name, n) for name in ("coprod", "lambda") for n in range(1, 5)]
    record(5, results)


def test_criterion_6_series():
    from dgoperads.series import TABLE_ENTRIES
    results = [checks.table_entry(e) for e in TABLE_ENTRIES]
    results += [checks.suspension_roundtrip(7), checks.distributive_law(6), checks.koszul_inverse(5)]
    record(6, results)


def test_criterion_7_morphisms():
    results = [checks.morphism_check(m) for m in checks.ALL_MORPHISMS]
    results += [checks.square_check(i) for i in range(8)]
    results.append(checks.degree_zero(5))
    results += [checks.exactness(row, 4) for row in (2, 3, 4)]
    record(7, results)


def test_criterion_8_integrality():
    record(8, [checks.integrality(name, n) for name in ("pi", "pasc", "kprime") for n in (3, 4)])


if __name__ == "__main__":
    t0 = time.perf_counter()
    for name, fn in sorted((k, v) for k, v in dict(globals()).items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            pass
    print(f"total {time.perf_counter() - t0:.1f} s")
