from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional


class TheoremStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    EXPECTED_FAIL_OBSERVED = "EXPECTED-FAIL-OBSERVED"


@dataclass
class TheoremResult:
    """Outcome of one verification suite"""

    slug: str
    provenance: str
    status: TheoremStatus
    checked: int = 0
    counterexample: Optional[Dict] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is not TheoremStatus.FAIL

    def to_dict(self) -> Dict:
        return {
            'theorem': self.slug,
            'provenance': self.provenance,
            'status': self.status.value,
            'checked': self.checked,
            'counterexample': self.counterexample,
            'detail': self.detail,
        }


@dataclass
class VerificationReport:
    """All suite results from one verification run"""

    scale: str
    results: List[TheoremResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> Optional[TheoremResult]:
        return next((r for r in self.results if not r.passed), None)

    def to_dict(self) -> Dict:
        return {
            'scale': self.scale,
            'passed': self.passed,
            'results': [r.to_dict() for r in self.results],
        }
