import pytest

from stacksort import enumerate_normalized


@pytest.fixture(scope="session")
def normalized():
    """Memoized access to the exhaustive corpus of normalized words by length."""
    cache: dict[int, list] = {}

    def get(m: int) -> list:
        if m not in cache:
            cache[m] = list(enumerate_normalized(m))
        return cache[m]

    return get
