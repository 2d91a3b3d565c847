import runpy
import shutil
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.name)
def test_demo_runs(script, tmp_path, capsys):
    copy = tmp_path / script.name
    shutil.copy(script, copy)
    runpy.run_path(str(copy), run_name="__main__")
    assert capsys.readouterr().out
