"""Minimal-crossing-number certificates."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, digest
from .resolution import is_a_adequate, is_ainv_adequate, require_link

ADEQUATE_LINK = "AdequateLink"
ONE_VERTEX = "OneVertexAdequate"
FRAMEWORK = "Framework"
ADAMS = "AdamsRigid"
ASSERTED = "Asserted"


@dataclass
class Certificate:
    subject: str
    claim: int
    route: str
    children: list = field(default_factory=list)
    citation: str | None = None
    method: str | None = None

    ok = True

    @property
    def trusted_externally(self) -> bool:
        return self.route == ASSERTED or any(c.trusted_externally for c in self.children)

    def to_json(self):
        out = {"certificate": True, "subject": self.subject, "claim": self.claim,
               "route": self.route, "children": [c.to_json() for c in self.children]}
        if self.citation is not None:
            out["citation"] = self.citation
        if self.method is not None:
            out["method"] = self.method
        return out


@dataclass
class Refusal:
    """No certificate could be issued.  This is not a non-minimality verdict."""
    subject: str
    reason: str
    witness: object = None

    ok = False

    def to_json(self):
        out = {"certificate": False, "subject": self.subject, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness.to_json() if hasattr(self.witness, "to_json") else self.witness
        return out


def asserted(d: Diagram, claim: int, citation: str) -> Certificate:
    if not citation:
        raise ValueError("asserted minimality needs a citation")
    return Certificate(digest(d), int(claim), ASSERTED, citation=citation)


def certify_link(d: Diagram):
    """Adequate link diagrams have minimal crossing number."""
    require_link(d)
    subject = digest(d)
    if not is_a_adequate(d):
        return Refusal(subject, "not A-adequate")
    if not is_ainv_adequate(d):
        return Refusal(subject, "not A-inverse-adequate")
    return Certificate(subject, d.crossing_count(), ADEQUATE_LINK)
