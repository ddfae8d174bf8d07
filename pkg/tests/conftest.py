import pytest
from hypothesis import strategies as st

from src.models.partition import Partition

FIG2 = Partition((11, 6, 4, 2, 2, 1, 1, 1, 1, 1))


def small_partitions(max_part: int = 7, max_length: int = 7):
    return st.lists(st.integers(1, max_part), max_size=max_length).map(
        lambda parts: Partition(tuple(sorted(parts, reverse=True)))
    )


@pytest.fixture
def fig2():
    return FIG2


@pytest.fixture
def config_file(tmp_path):
    """Write a user config and return its path."""

    def write(text: str):
        path = tmp_path / "config.yaml"
        path.write_text(text)
        return path

    return write
