import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def hcat_exe():
    exe = os.environ.get("HCAT_EXE") or shutil.which("hcat")
    if not exe:
        pytest.skip("hcat executable not found")
    return exe


@pytest.fixture(scope="session")
def schema_dir():
    return pathlib.Path(os.environ.get("HCAT_SCHEMAS", ROOT / "schemas"))


@pytest.fixture(scope="session")
def run(hcat_exe):
    def _run(*args):
        proc = subprocess.run([hcat_exe, *map(str, args)], capture_output=True, text=True)
        return proc.returncode, proc.stdout, proc.stderr

    return _run


@pytest.fixture(scope="session")
def certificate_file(run, tmp_path_factory):
    path = tmp_path_factory.mktemp("cert") / "cert.json"
    code, _, err = run("disjoint", "--H", 0.25, "--d1", 3, "--solve-d0", "--t-max", 10,
                       "--step", 0.1, "--out", path)
    assert code == 0, err
    return path


def load(path):
    return json.loads(pathlib.Path(path).read_text())
