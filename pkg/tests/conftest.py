import pytest

from matroidlab.verify import acceptance_spec, verify_corpus


@pytest.fixture(scope="session")
def acceptance_lines():
    """One verification run over the pinned corpus, shared by all criteria."""
    return verify_corpus(acceptance_spec())
