"""One test per acceptance criterion; the terminal summary prints a PASS/FAIL line for each."""

import itertools
import json
import time

import pytest

from twistlinks.alexfam import A
from twistlinks.braidword import parse
from twistlinks.census import build_census
from twistlinks.cli import main
from twistlinks.jones3 import jones_fulltwists
from twistlinks.oracle import DEFAULT_CROSSING_LIMIT, homfly_skein, kauffman_jones, mfw_bound
from twistlinks.polyhalf import ONE, HalfLaurent, invert_variable, tpow
from twistlinks.tlink import (
    braid_index,
    equal_links,
    max_tiers_check,
    parse_tlink,
    symmetry_family,
    tier_reduce,
    to_braid,
)
from twistlinks.verify import check_blocks, check_conjecture, run_verify

P = HalfLaurent.parse


def _assemble(a, gamma):
    shift, first, b2 = jones_fulltwists(a, parse(gamma))
    return (first + b2.shift(3 * a)).shift(shift), b2


@pytest.fixture(scope="module")
def closed_forms_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("verify") / "closed-forms.json"
    start = time.perf_counter()
    code = main(["verify", "--suite", "closed-forms", "--max-crossings", "14", "--out", str(out)])
    return code, out.read_bytes(), time.perf_counter() - start


@pytest.mark.criterion(1, "worked examples reproduced exactly")
def test_worked_examples():
    start = time.perf_counter()
    v819, b2_819 = _assemble(1, "B3: s2 s1")
    v10124, b2_10124 = _assemble(1, "B3: s1^3 s2")
    mirror, b2_mirror = _assemble(-3, "B3: s1^9 s2")
    elapsed = time.perf_counter() - start
    assert v819 == P("t^3 + t^5 - t^8")
    assert v10124 == P("t^4 + t^6 - t^10")
    assert invert_variable(mirror) == (ONE - A(6).shift(3)).shift(3)
    assert b2_819 == -tpow(2)
    assert b2_10124 == -tpow(3)
    assert b2_mirror == -A(7).shift(3)
    assert v819 == kauffman_jones(parse("B3: s1^3 s2 s1^3 s2"))
    assert v10124 == kauffman_jones(parse("B3: s1^5 s2 s1^3 s2"))
    assert elapsed < 1.0


@pytest.mark.criterion(2, "identity suite, zero failures, under 10 s")
def test_identity_suite():
    start = time.perf_counter()
    report = run_verify("identities", range_=15)
    elapsed = time.perf_counter() - start
    failed = [c for c in report["suites"]["identities"] if not c["passed"]]
    assert failed == []
    assert report["exit_code"] == 0
    assert elapsed < 10.0


@pytest.mark.criterion(3, "closed forms equal the oracles up to 14 crossings, under 5 min")
def test_oracle_equivalence(closed_forms_report):
    code, text, elapsed = closed_forms_report
    report = json.loads(text)
    failed = [c for c in report["suites"]["closed-forms"] if not c["passed"]]
    assert failed == []
    assert code == 0
    assert sum(c["count"] for c in report["suites"]["closed-forms"]) > 0
    assert elapsed < 300.0


@pytest.mark.criterion(4, "block structure reconstructions, zero failures")
def test_block_structure():
    res = check_blocks()
    print("block cases:", res["count"], "failed:", res["failed"])
    assert res["failures"] == []
    assert res["failed"] == 0 and res["count"] > 0


@pytest.mark.criterion(5, "Jones equality iff canonical equality; duplicate families collapse, under 1 min")
def test_classification():
    start = time.perf_counter()
    report = run_verify("classification", bounds=(8, 8, 12))
    failed = [c for c in report["suites"]["classification"] if not c["passed"]]
    assert failed == []
    seed = parse_tlink("T((7,27),(10,7))")
    family = symmetry_family(seed)
    for a, b in itertools.combinations(family, 2):
        assert equal_links(a, b)
    rows = build_census(8, 8, 12)
    owner = {}
    for r in rows:
        for f in r.tlink_forms:
            assert owner.setdefault(f, r.canonical) == r.canonical
            assert tier_reduce(parse_tlink(f)) == r.canonical
    assert len({r.canonical for r in rows}) == len(rows)
    assert len({r.jones for r in rows}) == len(rows)
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion(6, "braid index rule equals the MFW bound and the tier bound holds on the census")
def test_braid_index():
    checked = 0
    for r in build_census(8, 8, 12):
        for f in r.tlink_forms:
            L = parse_tlink(f)
            b = braid_index(L)[0]
            assert max_tiers_check(L)
            word = to_braid(L)
            if word.crossings <= DEFAULT_CROSSING_LIMIT:
                assert mfw_bound(homfly_skein(word)) == b
                checked += 1
    assert checked > 0


@pytest.mark.criterion(7, "zero V** claim counterexamples over condensed braids with w <= 20")
def test_conjecture_scan():
    res = check_conjecture(20)
    for f in res["failures"]:
        print("counterexample:", json.dumps(f, sort_keys=True))
    assert res["count"] > 0
    assert res["failed"] == 0


@pytest.mark.criterion(8, "census and verify output byte-identical across runs and worker counts")
def test_determinism(tmp_path, closed_forms_report, capsys):
    census = {}
    for fmt in ("json", "csv"):
        for run, workers in enumerate((1, 1, 4)):
            out = tmp_path / f"census-{fmt}-{run}.{fmt}"
            assert main(["census", "--x", "6", "--y", "6", "--z", "9", "--out", str(out),
                         "--format", fmt, "--workers", str(workers)]) == 0
            census.setdefault(fmt, set()).add(out.read_bytes())
    assert all(len(v) == 1 for v in census.values())
    for suite in ("identities", "classification"):
        reports = set()
        for run, workers in enumerate((1, 1, 3)):
            out = tmp_path / f"verify-{suite}-{run}.json"
            main(["verify", "--suite", suite, "--out", str(out), "--workers", str(workers)])
            reports.add(out.read_bytes())
        assert len(reports) == 1
    out = tmp_path / "closed-forms-parallel.json"
    main(["verify", "--suite", "closed-forms", "--max-crossings", "14", "--out", str(out), "--workers", "4"])
    assert out.read_bytes() == closed_forms_report[1]
