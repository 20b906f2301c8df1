import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def exact_q(f, t):
    """Q(f) as an exact rational, every product rebuilt from scratch."""
    total = Fraction(0)
    for v in range(1, t - f + 1):
        prod = Fraction(1)
        for j in range(v):
            prod *= 1 + Fraction(1 - f, t - 1 - j)
        total += prod / v
    return total


def exact_zhang(freqs):
    t = sum(freqs)
    cache = {}
    for f in set(freqs):
        cache[f] = exact_q(f, t)
    return sum(Fraction(f, t) * cache[f] for f in freqs)


def brute_kendall(xs, ys):
    """O(n^2) concordant/discordant/tie counts."""
    n = len(xs)
    conc = disc = tx = ty = 0
    for i in range(n):
        for j in range(i + 1, n):
            dx = (xs[i] > xs[j]) - (xs[i] < xs[j])
            dy = (ys[i] > ys[j]) - (ys[i] < ys[j])
            if dx == 0:
                tx += 1
            if dy == 0:
                ty += 1
            if dx and dy:
                if dx == dy:
                    conc += 1
                else:
                    disc += 1
    n0 = n * (n - 1) // 2
    return conc - disc, n0, tx, ty


def rel_diff(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    marker = _MARKERS.get(report.nodeid)
    if marker is None:
        return
    n, title = marker
    entry = _ACCEPTANCE.setdefault(n, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if report.failed:
        entry["failed"] += 1
    elif report.skipped:
        entry["skipped"] += 1
    elif report.when == "call":
        entry["passed"] += 1


_MARKERS = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _MARKERS[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[n]
        status = "FAIL" if e["failed"] else ("PASS" if e["passed"] else "SKIP")
        note = f" ({e['skipped']} case(s) skipped)" if e["skipped"] and status != "SKIP" else ""
        terminalreporter.write_line(f"criterion {n}: {status}  {e['title']}{note}")


@pytest.fixture
def tmp_text(tmp_path):
    def make(name, content, binary=False):
        p = tmp_path / name
        if binary:
            p.write_bytes(content)
        else:
            p.write_text(content, encoding="utf-8")
        return p

    return make
