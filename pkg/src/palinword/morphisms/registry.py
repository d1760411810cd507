"""
Built-in morphisms and the infinite words they generate.

Morphisms ship in ``data/fixtures.txt``; each section carries the claim it
backs (``3.b``, ``lp.a`` ...) and the parameters of that claim.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from ..repetitions.threshold import Threshold
from .generate import FixedPointWord, ImageWord, InsertedWord, PeriodicWord, WordSource
from .morphism import Morphism

logger = logging.getLogger(__name__)

DATA_PATH = Path(__file__).parent / "data" / "fixtures.txt"

_SECTION = re.compile(r"^\[([\w.-]+)\]\s*$")
_META = re.compile(r"^([a-z][a-z-]*):\s*(.*)$")
_IMAGE_OF = re.compile(r"^([\w-]+)\((.+)\)$")


@dataclass(frozen=True)
class Fixture:
    """One built-in morphism with the claim it supports."""

    name: str
    morphism: Morphism
    description: str = ""
    claim: Optional[str] = None
    alpha: Optional[Threshold] = None
    beta: Optional[Threshold] = None
    palindromes: Optional[int] = None
    pattern: Optional[str] = None

    @property
    def source_size(self) -> int:
        return len(self.morphism.images)


def parse_fixtures(text: str) -> Dict[str, Fixture]:
    """Parse the sectioned fixture format into fixtures keyed by name."""
    sections: Dict[str, List[str]] = {}
    current: Optional[List[str]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        header = _SECTION.match(raw)
        if header:
            name = header.group(1)
            if name in sections:
                raise ValueError(f"Line {lineno}: section [{name}] defined twice")
            current = sections.setdefault(name, [])
            continue
        if current is None:
            if raw.split("#", 1)[0].strip():
                raise ValueError(f"Line {lineno}: content before the first section")
            continue
        current.append(raw)

    fixtures = {}
    for name, lines in sections.items():
        meta: Dict[str, str] = {}
        body = []
        for raw in lines:
            match = _META.match(raw)
            if match and not raw.startswith("let "):
                meta[match.group(1)] = match.group(2).strip()
            else:
                body.append(raw)
        target = int(meta["target-size"]) if "target-size" in meta else None
        morphism = Morphism.parse("\n".join(body), name=name, target_size=target)
        if "source-size" in meta and int(meta["source-size"]) != len(morphism.images):
            raise ValueError(
                f"Fixture {name}: {len(morphism.images)} images, "
                f"expected {meta['source-size']}"
            )
        fixtures[name] = Fixture(
            name=name,
            morphism=morphism,
            description=meta.get("description", ""),
            claim=meta.get("claim"),
            alpha=Threshold.parse(meta["alpha"]) if "alpha" in meta else None,
            beta=Threshold.parse(meta["beta"]) if "beta" in meta else None,
            palindromes=int(meta["palindromes"]) if "palindromes" in meta else None,
            pattern=meta.get("pattern"),
        )
    return fixtures


@lru_cache(maxsize=None)
def _builtin() -> Dict[str, Fixture]:
    fixtures = parse_fixtures(DATA_PATH.read_text(encoding="utf-8"))
    logger.debug(f"Loaded {len(fixtures)} built-in morphisms from {DATA_PATH}")
    return fixtures


def fixture_names() -> List[str]:
    return list(_builtin())


def load_fixture(name: str) -> Fixture:
    """Look up a built-in morphism by name (``h``, ``mrs-25`` ...)."""
    fixtures = _builtin()
    if name not in fixtures:
        raise ValueError(
            f"Unknown morphism {name!r}; known: {', '.join(sorted(fixtures))}"
        )
    return fixtures[name]


def load_morphism(name: str) -> Morphism:
    return load_fixture(name).morphism


def fixture_for_claim(claim: str) -> Fixture:
    """The built-in morphism backing a claim label such as ``3.c``."""
    for fixture in _builtin().values():
        if fixture.claim == claim:
            return fixture
    raise ValueError(f"No built-in morphism backs claim {claim!r}")


def named_morphisms() -> Dict[str, Morphism]:
    """All built-in morphisms keyed by a name usable in word expressions."""
    return {name: f.morphism for name, f in _builtin().items() if "-" not in name}


def resolve_source(spec: str) -> WordSource:
    """Build an infinite word from a short description.

    Examples:
        ``t`` (fixed point of t from 0), ``g(h)`` (image of the fixed point
        of h under g), ``gamma(eta)``, ``periodic-012`` and ``inserted-tm``
        (Thue-Morse with 2 inserted inside every 10).
    """
    spec = spec.strip()
    if spec.startswith("periodic-"):
        return PeriodicWord(spec[len("periodic-") :], name=spec)
    if spec == "inserted-tm":
        return InsertedWord(resolve_source("thue-morse"), "10", "2", name=spec)
    image = _IMAGE_OF.match(spec)
    if image:
        outer = load_morphism(image.group(1))
        return ImageWord(outer, resolve_source(image.group(2)), name=spec)
    return FixedPointWord(load_morphism(spec), seed=0, name=spec)
