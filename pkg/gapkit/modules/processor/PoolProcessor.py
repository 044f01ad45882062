"""
-------------------------------------------------
gapkit - Density, diversity and domain gap of a
         synthetic pool
-------------------------------------------------
"""

from typing import List

from gapkit.core import Module, IO, DiversityConfig
from gapkit.store import read_features, load_model, resolve_grid, resolve_schemes
from gapkit.stats import pool_properties, compare_subsets


@IO.Config('model', str, None, the='reference model json')
@IO.Config('pool', str, None, the='pool feature file')
@IO.Config('grid', str, None, the='grid manifest yaml or a builtin grid name')
@IO.Config('exponent', float, 10.0, factory=float, the='diversity exponent k')
@IO.Config('schemes', List[str], [], factory=IO.F.list(str), the='subset schemes (builtin names or files) to compare')
class PoolProcessor(Module):

    model: str
    pool: str
    grid: str
    exponent: float
    schemes: List[str]

    def task(self) -> None:
        data = self.config.data
        model_path, pool_path, grid_path = self.require('model'), self.require('pool'), self.require('grid')

        config = DiversityConfig(self.exponent)
        schemes = resolve_schemes(self.schemes)
        model = load_model(model_path)
        pool = read_features(pool_path)
        grid = resolve_grid(grid_path)
        self.log(f"pool of {pool.n} items, grid {grid}")

        result = pool_properties(model, pool, grid, config, self.workers)
        result['exponent'] = config.exponent
        if len(schemes) > 0:
            result['subsets'] = compare_subsets(model, pool, grid, schemes, config, self.workers)

        manifest = data.manifest
        manifest.addInput('model', model_path)
        manifest.addInput('pool', pool_path)
        manifest.addInput('grid', grid_path)
        manifest.addParameters(exponent=config.exponent, schemes=list(self.schemes))

        data.addReport('pool_report.json', result)
