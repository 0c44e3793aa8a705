import pytest

from tamari_atlas.verify import report_lines, verify_suite


def test_suite_passes_at_3():
    results = verify_suite(3)
    assert results == sorted(results, key=lambda r: r.check_id)
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]


def test_report_line_format():
    for line in report_lines(verify_suite(2)):
        status, check_id, detail = line.split(' ', 2)
        assert status in ("PASS", "FAIL")
        assert check_id and detail


def test_suite_rejects_bad_bound():
    with pytest.raises(ValueError):
        verify_suite(0)
