import json

import pytest

from torickit.catalog import c2_fan, cp_fan, hirzebruch_fan
from torickit.cli import main
from torickit.document import document_from_fan, document_to_obj


@pytest.fixture
def write_fan(tmp_path):
    def _write(fan, name="fan"):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(document_to_obj(document_from_fan(fan, name))))
        return str(path)

    return _write


@pytest.fixture
def write_tuple(tmp_path):
    def _write(obj, name="tuple"):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj))
        return str(path)

    return _write


@pytest.fixture
def run_cli(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, json.loads(out)

    return _run


@pytest.fixture
def hirzebruch1():
    return hirzebruch_fan(1)


@pytest.fixture
def cp2():
    return cp_fan(2)


@pytest.fixture
def c2():
    return c2_fan()
