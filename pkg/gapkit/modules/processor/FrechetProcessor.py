"""
-------------------------------------------------
gapkit - Frechet distance between two Gaussian
         models
-------------------------------------------------
"""

from gapkit.core import Module, IO
from gapkit.store import load_model
from gapkit.stats import frechet_gaussian


@IO.Config('model_a', str, None, the='first model json')
@IO.Config('model_b', str, None, the='second model json')
class FrechetProcessor(Module):

    model_a: str
    model_b: str

    def task(self) -> None:
        path_a, path_b = self.require('model_a'), self.require('model_b')
        a, b = load_model(path_a), load_model(path_b)
        distance = frechet_gaussian(a, b)
        self.log(f"frechet distance {distance!r}")

        self.config.data.manifest.addInput('model_a', path_a)
        self.config.data.manifest.addInput('model_b', path_b)
        self.config.data.addReport('frechet_report.json', {
            'dim': a.dim,
            'frechet_distance': distance,
        })
