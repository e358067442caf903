from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any

from .graph import TreeWitness


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class Certificate:
    """Names the condition that settles a NO (or records extra facts)."""

    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "params": _jsonable(self.params)}


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    method: str
    witness: TreeWitness | None = None
    certificate: Certificate | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.answer is Answer.YES and self.witness is None:
            raise ValueError("a YES verdict needs a witness")
        if self.answer is Answer.NO and self.certificate is None:
            raise ValueError("a NO verdict needs a certificate")

    @classmethod
    def yes(cls, method: str, witness: TreeWitness, certificate: Certificate | None = None) -> Verdict:
        return cls(Answer.YES, method, witness=witness, certificate=certificate)

    @classmethod
    def no(cls, method: str, kind: str, **params: Any) -> Verdict:
        return cls(Answer.NO, method, certificate=Certificate(kind, params))

    @classmethod
    def undecided(cls, method: str, reason: str, certificate: Certificate | None = None) -> Verdict:
        return cls(Answer.UNDECIDED, method, certificate=certificate, reason=reason)

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def is_no(self) -> bool:
        return self.answer is Answer.NO

    def with_method(self, method: str) -> Verdict:
        return Verdict(self.answer, method, self.witness, self.certificate, self.reason)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"answer": self.answer.value, "method": self.method}
        if self.witness is not None:
            out["witness"] = [list(e) for e in self.witness.edges]
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    def to_json(self, **kw: Any) -> str:
        return json.dumps(self.to_dict(), **kw)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, enum.Enum):
        return value.value
    return value
