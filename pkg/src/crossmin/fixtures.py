"""Built-in diagrams, frozen as JSON with a checksum manifest."""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from pathlib import Path

from .diagram import Diagram, DiagramError

DATA = Path(__file__).with_name("data")
MANIFEST = "MANIFEST.json"

# primed names are awkward on some shells
ALIASES = {"fig5G′": "fig5G-prime", "fig5G'": "fig5G-prime", "K₆": "K6", "fig8": "fig8-framework"}


class UnknownFixture(DiagramError):
    pass


class ChecksumMismatch(DiagramError):
    pass


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _dir(directory):
    return Path(directory) if directory is not None else DATA


@lru_cache(maxsize=None)
def _manifest(directory: str) -> dict:
    return json.loads((Path(directory) / MANIFEST).read_text())


def names(directory=None) -> list:
    return sorted(_manifest(str(_dir(directory))))


def load_raw(name: str, directory=None) -> dict:
    d = _dir(directory)
    name = ALIASES.get(name, name)
    manifest = _manifest(str(d))
    if name not in manifest:
        raise UnknownFixture(f"no fixture named {name!r}")
    path = d / f"{name}.json"
    if file_digest(path) != manifest[name]:
        raise ChecksumMismatch(f"fixture {name} does not match its recorded checksum")
    return json.loads(path.read_text())


def load(name: str, directory=None) -> Diagram:
    raw = load_raw(name, directory)
    if "diagram" not in raw:
        raise UnknownFixture(f"fixture {name!r} is not a single diagram")
    return Diagram.from_json(raw["diagram"])


def load_framework(name: str = "fig8-framework", directory=None):
    """The planar framework and its replacements, with evidence attached."""
    from .certificate import asserted
    from .framework import PlanarFramework, Replacement

    raw = load_raw(name, directory)
    p = PlanarFramework(Diagram.from_json(raw["framework"]))
    reps = []
    for obj in raw["replacements"]:
        rep = Replacement.from_json(obj)
        ev = obj.get("evidence")
        if ev and ev.get("route") == "Asserted":
            rep.evidence = asserted(rep.fragment, ev["claim"], ev["citation"])
        reps.append(rep)
    return p, reps


def write(name: str, payload: dict, directory=None):
    """Freeze a fixture and record its checksum (used by the build tool)."""
    d = _dir(directory)
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{name}.json"
    path.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    mpath = d / MANIFEST
    manifest = json.loads(mpath.read_text()) if mpath.exists() else {}
    manifest[name] = file_digest(path)
    mpath.write_text(json.dumps(manifest, sort_keys=True, indent=1) + "\n")
    _manifest.cache_clear()
