from dataclasses import dataclass, field
from typing import Any, Dict
import json


@dataclass
class OutputRecord:
    """One command result as emitted on stdout"""

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    provenance: str = ""

    def to_dict(self) -> Dict:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'paper_ref': self.provenance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), allow_nan=False)

    @classmethod
    def from_dict(cls, data: Dict) -> 'OutputRecord':
        return cls(
            command=data['command'],
            inputs=data.get('inputs', {}),
            result=data.get('result', {}),
            provenance=data.get('paper_ref', ''),
        )

    @classmethod
    def from_json(cls, text: str) -> 'OutputRecord':
        return cls.from_dict(json.loads(text))
