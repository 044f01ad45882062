"""
-------------------------------------------------
gapkit - Sub-pool ids of a grid under a subset
         scheme
-------------------------------------------------
"""

from gapkit.core import Module, IO
from gapkit.store import resolve_grid, resolve_scheme
from gapkit.stats import sample_subset


@IO.Config('grid', str, None, the='grid manifest yaml or a builtin grid name')
@IO.Config('scheme', str, None, the='builtin scheme name or scheme file')
@IO.Config('scheme_name', str, None, the='scheme to pick from a file that holds several')
class SubsetFilter(Module):

    grid: str
    scheme: str
    scheme_name: str

    def task(self) -> None:
        grid_path = self.require('grid')
        scheme = resolve_scheme(self.require('scheme'), self.scheme_name)
        grid = resolve_grid(grid_path)

        ids = sample_subset(grid, scheme)
        self.log(f"scheme {scheme.name} keeps {len(ids)} of {grid.size} ids")

        manifest = self.config.data.manifest
        manifest.addInput('grid', grid_path)
        manifest.addParameters(scheme=self.scheme, scheme_name=self.scheme_name)

        self.config.data.addIdList('subset_ids.txt', ids)
        self.config.data.addReport('subset_report.json', {
            'scheme': scheme.to_dict(),
            'grid_size': grid.size,
            'count': len(ids),
        })
