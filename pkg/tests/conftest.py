import pathlib
import warnings

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"


def read_corpus(limit: int | None = None) -> list[str]:
    lines = []
    with open(DATA_DIR / "corpus_1000.smi") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                lines.append(line)
    return lines[:limit] if limit else lines


@pytest.fixture(scope="session")
def corpus() -> list[str]:
    return read_corpus()


@pytest.fixture(scope="session")
def corpus_sample() -> list[str]:
    # Every 10th molecule: enough spread for property tests at unit-test cost.
    return read_corpus()[::10]


@pytest.fixture(scope="session")
def dataset_path() -> pathlib.Path:
    return DATA_DIR / "example_dataset.csv"


@pytest.fixture(scope="session")
def generated_path() -> pathlib.Path:
    return DATA_DIR / "generated_fixture.smi"


@pytest.fixture(autouse=True)
def _quiet_stereo_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        yield
