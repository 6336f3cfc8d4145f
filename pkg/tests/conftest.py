import json
from pathlib import Path

import pytest

from seqbool.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def gss_reference():
    return json.loads((FIXTURES / "gss_x4_x_1.json").read_text())


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return run
