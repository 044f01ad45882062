"""
-------------------------------------------------
gapkit - RunManifest
         Provenance record embedded in every report.
-------------------------------------------------
"""

from typing import Any, Dict, Optional
from dataclasses import dataclass, field


@dataclass
class RunManifest:
    command: str
    version: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    duration: float = 0.0
    ridge_used: Optional[float] = None

    def addInput(self, name: str, path: Any) -> None:
        self.inputs[name] = path

    def addParameters(self, **parameters: Any) -> None:
        self.parameters.update(parameters)

    def to_dict(self) -> Dict[str, Any]:
        manifest: Dict[str, Any] = {
            'command': self.command,
            'version': self.version,
            'inputs': dict(self.inputs),
            'parameters': dict(self.parameters),
            'duration': self.duration,
        }
        if self.ridge_used is not None:
            manifest['ridge_used'] = self.ridge_used
        return manifest
