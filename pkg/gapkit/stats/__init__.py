from .gaussian import fit_gaussian, mahalanobis_sq, mahalanobis_sq_many, log_density
from .sigmoid_gda import lda_to_sigmoid, posterior_sigmoid, posterior_gda, equivalence_check
from .gap import per_sample_gaps, distribution_gap, cross_entropy, filtered_gap, histogram, scatter_export, outlier_count, gap_change, compare_gaps, build_gap_report
from .pool import expected_pair_count, adjacency_pairs, density, diversity, pool_domain_gap, frechet_gaussian, sample_subset, subset_grid, pool_properties, compare_subsets
from .selection import trial_seed, select, selection_bias_report, selection_frequencies
