from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def partitions(max_part=6, max_len=6, min_len=0):
    return st.lists(st.integers(1, max_part), min_size=min_len, max_size=max_len).map(
        lambda xs: tuple(sorted(xs, reverse=True)))


def two_row_factor_sets(max_weight=10):
    factor = st.one_of(st.tuples(st.integers(1, 5)),
                       st.tuples(st.integers(1, 5), st.integers(1, 5)).map(
                           lambda t: tuple(sorted(t, reverse=True))))
    return st.lists(factor, min_size=1, max_size=5).filter(
        lambda fs: sum(map(sum, fs)) <= max_weight)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
