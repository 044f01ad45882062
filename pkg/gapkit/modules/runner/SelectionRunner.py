"""
-------------------------------------------------
gapkit - Gap-aware selection from a per-item
         distance list
-------------------------------------------------
"""

from gapkit.core import Module, IO, SelectionConfig, SelectionMode
from gapkit.store import read_per_item
from gapkit.stats import select, selection_bias_report
from gapkit.stats.reduce import exact_sum


@IO.Config('per_item', str, None, the='gap report json or per-sample csv with id,mahalanobis_sq')
@IO.Config('count', int, None, the='number of items to select')
@IO.Config('mode', str, SelectionMode.GAP_WEIGHTED.value, the='gap-weighted | uniform-random')
@IO.Config('temperature', float, 1.0, factory=float, the='selection temperature tau')
@IO.Config('trials', int, 0, the='Monte Carlo trials for the bias report (0 disables it)')
class SelectionRunner(Module):

    per_item: str
    count: int
    mode: str
    temperature: float
    trials: int

    def task(self) -> None:
        path = self.require('per_item')
        items = read_per_item(path)
        config = SelectionConfig(self.require('count'), self.mode, self.temperature, self.config.seed)

        selected = select(items, config)
        distances = dict(items)
        self.log(f"selected {len(selected)} of {len(items)} items ({config.mode}, tau={config.temperature})")

        report = {
            'pool_size': len(items),
            'count': config.count,
            'mode': str(config.mode),
            'temperature': config.temperature,
            'seed': config.seed,
            'mean_selected_gap': exact_sum([distances[id] for id in selected]) / len(selected),
            'mean_pool_gap': exact_sum([v for _, v in items]) / len(items),
        }
        if self.trials > 0:
            report['bias'] = selection_bias_report(items, config, self.trials)

        manifest = self.config.data.manifest
        manifest.addInput('per_item', path)
        manifest.addParameters(count=config.count, mode=str(config.mode), temperature=config.temperature, seed=config.seed, trials=self.trials)

        self.config.data.addIdList('selected_ids.txt', selected)
        self.config.data.addReport('select_report.json', report)
