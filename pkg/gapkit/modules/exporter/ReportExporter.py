"""
-------------------------------------------------
gapkit - Write everything collected in RunData
         to the output directory
-------------------------------------------------
"""

from typing import Any, Dict
import csv, json, os
import numpy as np

from gapkit.core import Module, IO
from gapkit.store import save_model


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def write_json(path: str, document: Dict[str, Any], indent: int = 4) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(document, f, indent=indent, sort_keys=True, default=_jsonable)
        f.write('\n')


@IO.Config('indent', int, 4, the='json indentation')
@IO.Config('manifest', bool, True, the='embed the run manifest in every report')
class ReportExporter(Module):

    indent: int
    manifest: bool

    def task(self) -> None:
        data = self.config.data
        out = self.config['out']
        os.makedirs(out, exist_ok=True)

        if self.config.logger is not None:
            data.manifest.duration = self.config.logger.duration
        manifest = data.manifest.to_dict()

        for path, model in data.models.items():
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            save_model(model, path)
            self.log(f"model written to {path}")

        for file, report in data.reports.items():
            document = dict(report)
            if self.manifest:
                document['manifest'] = manifest
            write_json(os.path.join(out, file), document, self.indent)
            self.log.debug(f"report {file}")

        for file, table in data.tables.items():
            with open(os.path.join(out, file), 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(table.header)
                writer.writerows(table.rows)
            self.log.debug(f"table {file} ({len(table.rows)} rows)")

        for file, ids in data.id_lists.items():
            with open(os.path.join(out, file), 'w', encoding='utf-8') as f:
                for id in ids:
                    f.write(id + '\n')
            self.log.debug(f"id list {file} ({len(ids)} ids)")

        self.log(f"{len(data.reports)} reports written to {out}")
