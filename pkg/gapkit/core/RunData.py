"""
-------------------------------------------------
gapkit - RunData
         Everything a run produces, collected by the
         computing modules and written out by the
         ReportExporter.
-------------------------------------------------
"""

from typing import Any, Dict, List, Optional, Sequence
from dataclasses import dataclass, field

from .RunManifest import RunManifest


@dataclass
class Table:
    header: List[str]
    rows: List[Sequence[Any]]


class RunData:

    def __init__(self) -> None:
        self.manifest: Optional[RunManifest] = None
        self.reports: Dict[str, Dict[str, Any]] = {}
        self.tables: Dict[str, Table] = {}
        self.id_lists: Dict[str, List[str]] = {}
        self.models: Dict[str, Any] = {}
        self.exit_code: int = 0

    def addReport(self, file: str, report: Dict[str, Any]) -> None:
        assert file not in self.reports, f"report {file} already collected"
        self.reports[file] = report

    def addTable(self, file: str, header: List[str], rows: List[Sequence[Any]]) -> None:
        self.tables[file] = Table(header, rows)

    def addIdList(self, file: str, ids: List[str]) -> None:
        self.id_lists[file] = list(ids)

    def addModel(self, path: str, model: Any) -> None:
        self.models[path] = model

    def __str__(self) -> str:
        return (f"<RunData reports={sorted(self.reports)} tables={sorted(self.tables)} "
                f"id_lists={sorted(self.id_lists)} models={sorted(self.models)}>")
