import sys

import pytest
from hypothesis import settings

from oracles import CORPUS, corpus_file

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=sorted(p.stem for p in CORPUS.glob("*.lie")))
def corpus_entry(request):
    return corpus_file(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    mod._print_results(terminalreporter.write_line)
