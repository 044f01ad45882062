"""
-------------------------------------------------
gapkit - Randomized sigmoid / GDA posterior
         equivalence check
-------------------------------------------------
"""

from gapkit.core import Module, IO, GapNumericError
from gapkit.stats import equivalence_check

# a deviation above the tolerance is a numeric failure
EXIT_NOT_EQUIVALENT = GapNumericError.exit_code


@IO.Config('trials', int, 1000, the='number of random shared-covariance instances')
@IO.Config('dim_max', int, 8, the='largest feature dimension drawn')
@IO.Config('tolerance', float, 1e-9, factory=float, the='largest accepted absolute posterior deviation')
class EquivalenceRunner(Module):

    trials: int
    dim_max: int
    tolerance: float

    def task(self) -> None:
        seed = self.config.seed
        deviation, trials = equivalence_check(self.trials, self.dim_max, seed)
        passed = deviation <= self.tolerance

        self.config.data.manifest.addParameters(trials=self.trials, dim_max=self.dim_max, tolerance=self.tolerance, seed=seed)
        self.config.data.addReport('equiv_report.json', {
            'max_deviation': deviation,
            'trials': trials,
            'dim_max': self.dim_max,
            'tolerance': self.tolerance,
            'passed': passed,
        })

        print(repr(deviation))
        if passed:
            self.log(f"max posterior deviation {deviation!r} over {trials} trials")
        else:
            self.log.error(f"max posterior deviation {deviation!r} exceeds {self.tolerance!r}")
            self.config.data.exit_code = EXIT_NOT_EQUIVALENT
