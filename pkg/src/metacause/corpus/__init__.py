"""Bundled example networks (``.mnet`` files)."""

from importlib import resources

NAMES = ("ex1", "ex2", "ex3_modified", "glycolysis", "glycolysis_sbeta", "glycolysis_tpi")

# the causality example reuses the second network unchanged
ALIASES = {"ex3": "ex2"}


def path(name: str):
    if not name.endswith(".mnet"):
        name += ".mnet"
    return resources.files(__name__).joinpath(name)


def load(name: str):
    """Parse a bundled network; returns ``(network, solution)``."""
    from ..textio import parse_network

    p = path(name)
    return parse_network(p.read_text(encoding="utf-8"), name=name, source=p.name)
