"""End-to-end acceptance checks, one numbered criterion per test.

Each test prints a single pass/fail line on the real stdout so the
summary survives pytest's capture.
"""

import dataclasses
import functools

import pytest

from webfold.errors import ConcurrentArcs, UnrecognizedBlock, VerticalPairNotAnArc
from webfold.mdiagram import Arc, BoundaryVertex, MDiagram, crossings
from webfold.oracle import enumerate_words, hook_length_count, verify
from webfold.planarweb import boundary_face, web_distance
from webfold.tableaux import fold, from_word, promote_bounded
from webfold.web3 import (
    _classify_block,
    crossed_mdiagram_of_decomposition,
    decompose_blocks,
    web_of_tableau,
)

CHAIN_WORD = "111122213132223333"
CHAIN_FOLD = "112212121133332323"
ODD_FOLD = "111232323"
GUARD_NAMES = ("ConcurrentArcs", "UnrecognizedBlock", "VerticalPairNotAnArc")


def _report(capfd, num: int, ok: bool, text: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {text}"
    with capfd.disabled():
        print(line)


@functools.cache
def _verified(theorem: str, max_n: int):
    return verify(theorem, max_n)


_SUITE_RUNS = [
    ("thm-2byn", 8),
    ("thm-fw1", 5),
    ("thm-fw2", 5),
    ("roundtrip-3web", 5),
    ("promotion-rotation", 8),
    ("evacuation-reflection", 8),
    ("distance-lemmas", 4),
    ("block-patterns", 5),
    ("promotion-order", 8),
    ("fold-domino", 8),
]


def test_criterion_01_two_row_folding(capfd):
    r = _verified("thm-2byn", 8)
    ok = r.passed and r.elapsed < 5.0
    _report(capfd, 1, ok, f"2-row folding theorem, n<=8 ({r.instances} instances, {r.elapsed:.2f}s)")
    assert r.passed, r.text()
    assert r.elapsed < 5.0


def test_criterion_02_domino_extraction(capfd):
    r = _verified("thm-fw1", 5)
    ok = r.passed and r.elapsed < 60.0
    _report(capfd, 2, ok, f"symmetric web to domino tableau, n<=5 ({r.instances} instances, {r.elapsed:.2f}s)")
    assert r.passed, r.text()
    assert r.elapsed < 60.0


def test_criterion_03_crossed_web(capfd):
    r = _verified("thm-fw2", 5)
    ok = r.passed and r.elapsed < 60.0
    _report(capfd, 3, ok, f"crossed web equals original web, n<=5 ({r.instances} instances, {r.elapsed:.2f}s)")
    assert r.passed, r.text()
    assert r.elapsed < 60.0


def test_criterion_04_roundtrip(capfd):
    r = _verified("roundtrip-3web", 5)
    _report(capfd, 4, r.passed, f"3-row web round trip, n<=5 ({r.instances} instances, {r.elapsed:.2f}s)")
    assert r.passed, r.text()


def test_criterion_05_regression_fixtures(capfd):
    t = from_word(CHAIN_WORD)
    checks = [fold(t).word == CHAIN_FOLD]
    w = web_of_tableau(t)
    n = w.n_boundary
    h = [
        web_distance(w, boundary_face(w, j), boundary_face(w, n - j))
        for j in range(n // 2 + 1)
    ]
    checks.append(h == [0, 1, 2, 4, 6, 4, 3, 2, 2, 0])
    checks.append(decompose_blocks(from_word(CHAIN_FOLD)).vertical_pairs == ((3, 4), (9, 8)))
    checks.append(decompose_blocks(from_word(ODD_FOLD)).vertical_pairs == ((2, 0), (4, 3)))
    chain = from_word("12112212")
    seen = []
    for k in (8, 6, 4, 2):
        chain = promote_bounded(chain, k)
        seen.append(chain.word)
    checks.append(seen == ["11122122", "11221122", "12121122", "12121122"])
    ok = all(checks)
    _report(capfd, 5, ok, "regression fixtures (words, mirror distances, vertical pairs, fold chain)")
    assert ok, checks


def test_criterion_06_correspondence(capfd):
    r1 = _verified("promotion-rotation", 8)
    r2 = _verified("evacuation-reflection", 8)
    ok = r1.passed and r2.passed
    _report(capfd, 6, ok, f"rotation/reflection vs promotion/evacuation ({r1.instances + r2.instances} instances)")
    assert r1.passed, r1.text()
    assert r2.passed, r2.text()


def test_criterion_07_structural_lemmas(capfd):
    r1 = _verified("distance-lemmas", 4)
    r2 = _verified("block-patterns", 5)
    ok = r1.passed and r2.passed
    _report(capfd, 7, ok, f"web validity, vertical pairs, distance bounds ({r1.instances + r2.instances} instances)")
    assert r1.passed, r1.text()
    assert r2.passed, r2.text()


def test_criterion_08_operator_algebra(capfd):
    r1 = _verified("promotion-order", 8)
    r2 = _verified("fold-domino", 8)
    ok = r1.passed and r2.passed
    _report(capfd, 8, ok, f"operator identities ({r1.instances + r2.instances} instances)")
    assert r1.passed, r1.text()
    assert r2.passed, r2.text()


def test_criterion_09_enumeration_counts(capfd):
    two_row = [1, 2, 5, 14, 42, 132, 429, 1430]
    three_row = [1, 5, 42, 462, 6006]
    ok = True
    for n, expected in zip(range(1, 9), two_row):
        ok = ok and hook_length_count((n, n)) == expected
        ok = ok and sum(1 for _ in enumerate_words((n, n))) == expected
    for n, expected in zip(range(1, 6), three_row):
        ok = ok and hook_length_count((n, n, n)) == expected
        ok = ok and sum(1 for _ in enumerate_words((n, n, n))) == expected
    _report(capfd, 9, ok, "enumeration counts match the hook length formula")
    assert ok


def test_criterion_10_error_paths(capfd):
    quiet = True
    for theorem, max_n in _SUITE_RUNS:
        report = _verified(theorem, max_n)
        quiet = quiet and report.passed
        for failure in report.failures:
            if any(name in failure.lhs for name in GUARD_NAMES):
                quiet = False

    concurrent = MDiagram(
        tuple(
            BoundaryVertex(lab, x)
            for lab, x in [("a", -4), ("b", -2), ("c", -1), ("d", 1), ("e", 2), ("f", 4)]
        ),
        (Arc("b", "e"), Arc("c", "f"), Arc("a", "d")),
    )
    with pytest.raises(ConcurrentArcs):
        crossings(concurrent)

    with pytest.raises(UnrecognizedBlock):
        _classify_block(False, (0, 1), "columns 1..2")
    dec = decompose_blocks(from_word(CHAIN_FOLD))
    with pytest.raises(VerticalPairNotAnArc):
        crossed_mdiagram_of_decomposition(
            dataclasses.replace(dec, vertical_pairs=((1, 6),))
        )

    _report(capfd, 10, quiet, "guard errors silent on valid input, raised on invalid input")
    assert quiet
