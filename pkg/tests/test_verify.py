import pytest

from splab.verify import (
    SUITE_NAMES,
    run_suite,
    suite_cho,
    suite_free_schur,
    suite_invariants,
    suite_mixed_jdt,
    suite_plactic_completeness,
    suite_plactic_relations,
    suite_qp_identity,
    suite_sw_count,
    suite_sw_marker,
)


def test_all_suites_pass_at_small_bounds():
    runs = [
        suite_mixed_jdt(2, 4),
        suite_invariants(2, 4),
        suite_plactic_relations(3),
        suite_plactic_completeness(2, 4),
        suite_sw_marker(4, 2),
        suite_sw_count(4, 2),
        suite_cho(4, 2),
        suite_qp_identity(4, 2),
        suite_free_schur(3, 2),
    ]
    for result in runs:
        assert result.failed == 0, result.counterexample
        assert result.tested > 0
        assert result.counterexample is None


def test_mixed_jdt_word_counts():
    assert suite_mixed_jdt(2, 3).tested == 2 + 4 + 8
    assert suite_mixed_jdt(3, 2).tested == 3 + 9


def test_parallel_runs_are_reproducible():
    for name, kwargs in [
        ("mixed-jdt", {"n": 2, "max_len": 4}),
        ("sw-count", {"max_size": 4, "n": 2}),
    ]:
        serial = run_suite(name, **kwargs, jobs=1)
        parallel = run_suite(name, **kwargs, jobs=2)
        assert serial.to_dict() == parallel.to_dict()


def test_run_suite_dispatch():
    assert set(SUITE_NAMES) == {
        "mixed-jdt", "plactic-relations", "plactic-completeness", "sw-marker",
        "sw-count", "cho", "qp-identity", "free-schur", "invariants",
    }
    with pytest.raises(KeyError):
        run_suite("bogus")


def test_result_dict_shape():
    result = run_suite("free-schur", max_size=2, n=2)
    payload = result.to_dict()
    assert payload["suite"] == "free-schur"
    assert payload["failed"] == 0
    assert set(payload) == {"suite", "tested", "failed", "counterexample", "bounds"}
