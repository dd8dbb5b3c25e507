import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from condiam.search import enumerate_trees

CORPORA = Path(__file__).parent.parent / "corpora"


@pytest.fixture(scope="session")
def trees_by_n():
    """Lazily cached exhaustive tree lists, shared across the suite."""
    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            cache[n] = list(enumerate_trees(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def corpus_path():
    def get(n: int) -> Path:
        path = CORPORA / f"connected_n{n}.g6"
        if not path.exists():
            pytest.fail(
                f"missing corpus {path}; regenerate with scripts/build_corpora.py {n}"
            )
        return path

    return get
