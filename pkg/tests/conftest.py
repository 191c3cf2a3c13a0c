import pytest

from rbhopf import GF, QQ, Mat, builtin

HOPF_FIXTURES = ["group:C2", "group:C3", "group:S3", "sweedler4",
                 "dual-group:C2", "trivial"]


@pytest.fixture(scope="session")
def c2():
    return builtin("group:C2")


@pytest.fixture(scope="session")
def c3():
    return builtin("group:C3")


@pytest.fixture(scope="session")
def s3():
    return builtin("group:S3")


@pytest.fixture(scope="session")
def h4():
    return builtin("sweedler4")


@pytest.fixture(scope="session")
def e54():
    return builtin("example54")


@pytest.fixture(scope="session")
def f2():
    return GF(2)


@pytest.fixture(scope="session")
def f3():
    return GF(3)


def small_fraction_entries(n):
    """Hypothesis strategy for n rational scalars of modest height."""
    from hypothesis import strategies as st
    return st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4),
                    min_size=n, max_size=n)


def random_mat(field, rows, cols):
    """Hypothesis strategy for a rows x cols matrix over QQ or F_p."""
    from hypothesis import strategies as st
    if field is QQ or field == QQ:
        scal = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    else:
        scal = st.integers(min_value=0, max_value=field.p - 1).map(field.from_int)
    return st.lists(st.lists(scal, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(lambda e: Mat(field, e))
