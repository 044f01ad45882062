"""
-------------------------------------------------
gapkit - Distribution gap of test sets against a
         reference model
-------------------------------------------------
"""

from typing import List

from gapkit.core import Module, IO, GapDataError
from gapkit.store import read_features, load_model
from gapkit.stats import build_gap_report, compare_gaps, gap_change


@IO.Config('model', str, None, the='reference model json')
@IO.Config('test', List[str], None, factory=IO.F.list(str), the='test feature files; the report covers the first, further files are compared')
@IO.Config('fractions', List[float], [1.0], factory=IO.F.list(float), the='kept fractions for the filtered gap')
@IO.Config('bins', int, 20, the='histogram bin count')
@IO.Config('hist_range', List[float], None, factory=IO.F.list(float), the='histogram range [lo, hi] over sqrt distances')
@IO.Config('scatter', bool, True, the='export (score, distance) pairs when the test set has scores')
@IO.Config('outlier_threshold', float, None, factory=float, the='count samples whose distance exceeds this value')
@IO.Config('model_before', str, None, the='second model; exports the per-sample distance change from it')
class GapProcessor(Module):

    model: str
    test: List[str]
    fractions: List[float]
    bins: int
    hist_range: List[float]
    scatter: bool
    outlier_threshold: float
    model_before: str

    def task(self) -> None:
        data = self.config.data
        model_path = self.require('model')
        test_paths = self.require('test')
        if len(test_paths) == 0:
            raise GapDataError(f"{self.label}: at least one test feature file is required")

        hist_range = None
        if self.hist_range is not None:
            if len(self.hist_range) != 2:
                raise GapDataError(f"histogram range needs two values [lo, hi], got {self.hist_range}")
            hist_range = (self.hist_range[0], self.hist_range[1])

        model = load_model(model_path)
        tests = [read_features(p) for p in test_paths]
        self.log(f"gap of {tests[0].n} samples from {test_paths[0]} against a d={model.dim} model")

        report = build_gap_report(model, tests[0], self.fractions, self.bins, hist_range, self.scatter, self.outlier_threshold, self.workers)
        for warning in report.warnings:
            self.log.warning(warning)
        if report.histogram.clamped:
            self.log.warning(f"{report.histogram.clamped} distances fall outside the histogram range and were clamped")

        result = report.to_dict()
        data.addTable('per_sample.csv', ['id', 'mahalanobis_sq'], [[id, m] for id, m in report.per_sample])
        data.addTable('histogram.csv', ['lo', 'hi', 'count'], report.histogram.rows())
        if report.scatter is not None:
            data.addTable('scatter.csv', ['score', 'distance'], [[s, r] for s, r in report.scatter])

        if len(tests) > 1:
            result['comparison'] = compare_gaps(model, dict(zip(test_paths, tests)), self.fractions, self.workers)

        if self.model_before is not None:
            rows, summary = gap_change(load_model(self.model_before), model, tests[0], self.workers)
            data.addTable('gap_change.csv', ['id', 'distance_before', 'distance_after', 'delta'], rows)
            result['gap_change'] = summary
            self.log(f"{summary['increased']} of {summary['n']} samples moved further from the reference")

        manifest = data.manifest
        manifest.addInput('model', model_path)
        manifest.addInput('test', list(test_paths))
        if self.model_before is not None:
            manifest.addInput('model_before', self.model_before)
        manifest.addParameters(
            fractions=list(self.fractions),
            bins=self.bins,
            hist_range=list(hist_range) if hist_range is not None else None,
            scatter=self.scatter,
            outlier_threshold=self.outlier_threshold,
        )

        data.addReport('gap_report.json', result)
