import json
import os
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def _binary():
    env = os.environ.get("QMAIN_BIN")
    if env:
        return env
    return str(ROOT / "build" / "tools" / "qmain")


@pytest.fixture(scope="session")
def qmain():
    exe = _binary()
    if not Path(exe).exists():
        pytest.skip("qmain binary not built")

    def run(*args, stdin=None, check=True):
        proc = subprocess.run([exe, *args], input=stdin, capture_output=True, text=True)
        if check and proc.returncode != 0:
            raise AssertionError(f"qmain {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    path = os.environ.get("QMAIN_SCHEMA", str(ROOT / "schema" / "analysis_record.schema.json"))
    with open(path) as f:
        return json.load(f)
