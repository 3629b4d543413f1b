"""
Clause reports
Pass/fail records shared by the property verifiers (structure theory,
Brown-graph properties)
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ClauseResult:
    """One checked property; counterexample lists the offending vertices."""
    clause_id: str
    passed: bool
    counterexample: Optional[List[int]] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "clause_id": self.clause_id,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


@dataclass
class ClauseReport:
    """Ordered clause results for one verification run."""
    subject: str
    clauses: List[ClauseResult] = field(default_factory=list)
    info: Dict[str, Any] = field(default_factory=dict)

    def add(self, clause_id: str, passed: bool,
            counterexample: Optional[List[int]] = None, detail: str = "") -> ClauseResult:
        result = ClauseResult(clause_id, bool(passed),
                              [int(v) for v in counterexample] if counterexample else None,
                              detail)
        self.clauses.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, clause_id: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause_id == clause_id:
                return c
        raise KeyError(clause_id)

    def failed(self) -> List[ClauseResult]:
        return [c for c in self.clauses if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "clauses": [c.to_dict() for c in self.clauses],
            "info": self.info,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


__all__ = ["ClauseResult", "ClauseReport"]
