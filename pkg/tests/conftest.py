import json

import pytest

import main


@pytest.fixture
def cli(capsys):
    """main(argv) 실행 후 (종료 코드, stdout, stderr)"""
    def run(*argv):
        code = main.main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


@pytest.fixture
def cli_json(cli):
    def run(*argv):
        code, out, err = cli(*argv, "--json")
        return code, json.loads(out)
    return run
