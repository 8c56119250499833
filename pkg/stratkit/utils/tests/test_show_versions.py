"""Test the show_versions helper."""
# License: MIT

from stratkit import config_context
from stratkit.utils._show_versions import DEPENDENCIES
from stratkit.utils._show_versions import _get_deps_info
from stratkit.utils._show_versions import show_versions


def test_get_deps_info():
    deps_info = _get_deps_info()
    assert list(deps_info) == list(DEPENDENCIES)
    assert deps_info["numpy"] is not None


def test_show_versions_default(capsys):
    with config_context(budget=123):
        show_versions()
    out, _ = capsys.readouterr()
    for key in ("python", "executable", "machine", "budget"):
        assert key in out
    assert "123" in out
    for name in DEPENDENCIES:
        assert name in out


def test_show_versions_github(capsys):
    show_versions(github=True)
    out, _ = capsys.readouterr()
    assert out.startswith("<details><summary>System, Dependency Information</summary>")
    assert "**System**" in out
    assert "**Python dependencies**" in out
    assert "* python" in out
    for name in DEPENDENCIES:
        assert f"* {name}" in out
    assert out.rstrip().endswith("</details>")
