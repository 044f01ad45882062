"""
-------------------------------------------------
gapkit - Fit a reference Gaussian model
-------------------------------------------------
"""

import os

from gapkit.core import Module, IO
from gapkit.store import read_features
from gapkit.stats import fit_gaussian

MODEL_FILE = 'model.json'


@IO.Config('reference', str, None, the='reference feature file (csv or fset)')
@IO.Config('ridge', float, 0.0, factory=float, the='ridge added to the covariance diagonal')
@IO.Config('model_out', str, None, the='model path; defaults to model.json in the output directory')
class FitRunner(Module):

    reference: str
    ridge: float
    model_out: str

    def task(self) -> None:
        path = self.require('reference')
        reference = read_features(path)
        self.log(f"fitting {reference.n} x {reference.dim} reference features from {path}")

        model = fit_gaussian(reference, self.ridge)
        if model.diagnostics.get('escalated'):
            self.log.warning(f"covariance not positive definite at ridge {self.ridge}, escalated to {model.ridge}")
        if model.diagnostics.get('rank_deficient'):
            self.log.warning(f"n={reference.n} <= d={reference.dim}: covariance is rank deficient")

        manifest = self.config.data.manifest
        manifest.addInput('reference', path)
        manifest.addParameters(ridge=self.ridge)
        manifest.ridge_used = model.ridge
        if self.model_out is not None:
            manifest.addParameters(model_out=self.model_out)

        self.config.data.addModel(self.model_out or os.path.join(self.config['out'], MODEL_FILE), model)
        self.config.data.addReport('fit_report.json', {
            'n': reference.n,
            'dim': model.dim,
            'ridge_requested': self.ridge,
            'ridge_used': model.ridge,
            'logdet': model.logdet,
            'constant_term': model.constant,
            'diagnostics': dict(model.diagnostics),
        })
