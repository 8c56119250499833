"""Report the platform, the dependency versions and the active configuration,
to be pasted into bug reports."""

# License: MIT

import importlib
import platform
import sys

DEPENDENCIES = ("pip", "setuptools", "stratkit", "numpy", "scipy", "joblib", "networkx")


def _get_sys_info():
    return {
        "python": sys.version.replace("\n", " "),
        "executable": sys.executable,
        "machine": platform.platform(),
    }


def _get_deps_info():
    """Installed version of each dependency, ``None`` when it is missing."""
    versions = {}
    for name in DEPENDENCIES:
        try:
            module = sys.modules.get(name) or importlib.import_module(name)
        except ImportError:
            versions[name] = None
        else:
            versions[name] = getattr(module, "__version__", None)
    return versions


def _get_config_info():
    from .._config import get_config

    return dict(get_config())


def show_versions(github=False):
    """Print the platform, dependency versions and configuration.

    Parameters
    ----------
    github : bool, default=False
        Wrap the report in a collapsible GitHub ``<details>`` block.
    """
    sections = [
        ("System", _get_sys_info()),
        ("Python dependencies", _get_deps_info()),
        ("Configuration", _get_config_info()),
    ]
    if not github:
        for title, info in sections:
            print(f"\n{title}:")
            for key, value in info.items():
                print(f"{key:>11}: {value}")
        return

    lines = ["<details><summary>System, Dependency Information</summary>", ""]
    for title, info in sections:
        lines += [f"**{title}**", ""]
        lines += [f"* {key:<10}: `{value}`" for key, value in info.items()]
        lines.append("")
    lines.append("</details>")
    print("\n".join(lines))
