"""Bundled example diagrams."""

from importlib import resources
from pathlib import Path

from ..diagrams import GluingSpec, parse_diagram


def names() -> list[str]:
    return sorted(p.name[: -len(".diagram")] for p in resources.files(__name__).iterdir()
                  if p.name.endswith(".diagram"))


def path(name: str) -> Path:
    p = resources.files(__name__) / f"{name}.diagram"
    if not p.is_file():
        raise KeyError(f"no bundled diagram named {name!r}")
    return Path(str(p))


def load(name: str) -> GluingSpec:
    return parse_diagram(path(name).read_text(encoding="utf-8"))
