from wklr.checks import SuiteResult, check_peeling, fixed_weightings, run_all
from wklr.parallel import ordered_map

SUITES = [
    "Fock commutators", "divided powers", "crystal", "tableau degree", "Uglovation",
    "Koszul flip", "dominance", "peeling", "semi-orthogonal",
]


def test_suite_result_bookkeeping():
    r = SuiteResult("demo")
    r.record(True, "a")
    r.record(False, "b")
    r.record(False, "c")
    assert (r.cases, r.failures, r.first) == (3, 2, "b")
    assert not r.ok
    assert r.line() == "FAIL  demo: 3 cases, 2 failures  first failure: b"


def test_ordered_map_keeps_order():
    jobs = list(range(50))
    assert ordered_map(lambda x: x * x, jobs, 8) == [x * x for x in jobs]


def test_small_run_all_passes_every_suite():
    results = run_all(max_size=2, random_count=10, random_max_size=3)
    assert len(results) == len(SUITES)
    for r, name in zip(results, SUITES):
        assert name in r.name
        assert r.ok, (r.name, r.first)
        assert r.cases > 0


def test_random_cases_depend_on_seed_only():
    a = [r.line() for r in run_all(max_size=1, seed=5, random_count=20, random_max_size=3)]
    b = [r.line() for r in run_all(max_size=1, seed=5, random_count=20, random_max_size=3, threads=4)]
    assert a == b


def test_peeling_skips_and_reports_degenerate_blocks():
    r = check_peeling(fixed_weightings(), 2)
    assert r.ok
    assert any("skipped" in n for n in r.notes)
