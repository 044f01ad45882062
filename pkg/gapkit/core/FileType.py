"""
-------------------------------------------------
gapkit - File types understood by the toolkit
-------------------------------------------------
"""

from enum import Enum
import os


class FileType(Enum):
    NONE        = None
    CSV         = "csv"
    FSET        = "fset"
    JSON        = "json"
    YAML        = "yaml"

    def __str__(self) -> str:
        return self.name

    @staticmethod
    def fromPath(path: str) -> 'FileType':
        ext = os.path.splitext(path)[1].lower().lstrip('.')
        if ext == 'yml':
            ext = 'yaml'
        elif ext in ('bin', 'fset'):
            ext = 'fset'
        for ft in FileType:
            if ft.value == ext:
                return ft
        return FileType.NONE
