"""
-------------------------------------------------
gapkit - GaussianModel JSON documents
-------------------------------------------------
"""

from typing import Any, Dict
import json, os
import numpy as np

from gapkit.core.Error import GapFormatError
from gapkit.core.GaussianModel import GaussianModel

MODEL_FORMAT = 'gapkit-gaussian'
MODEL_VERSION = 1


def model_to_dict(model: GaussianModel) -> Dict[str, Any]:
    return {
        'format': MODEL_FORMAT,
        'version': MODEL_VERSION,
        'dim': model.dim,
        'ridge': model.ridge,
        'mean': model.mean.tolist(),
        'cov': model.cov.tolist(),
        'diagnostics': dict(model.diagnostics),
    }


def save_model(model: GaussianModel, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(model_to_dict(model), f, indent=4, sort_keys=True)
        f.write('\n')


def load_model(path: str) -> GaussianModel:
    if not os.path.isfile(path):
        raise GapFormatError("model file not found", path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise GapFormatError(f"invalid model JSON: {e}", path) from None

    if not isinstance(data, dict) or data.get('format') != MODEL_FORMAT:
        raise GapFormatError(f"not a {MODEL_FORMAT} document", path)
    if data.get('version') != MODEL_VERSION:
        raise GapFormatError(f"unsupported model version {data.get('version')}", path)

    try:
        dim = int(data['dim'])
        ridge = float(data['ridge'])
        mean = np.asarray(data['mean'], dtype=np.float64)
        cov = np.asarray(data['cov'], dtype=np.float64)
    except (KeyError, TypeError, ValueError, OverflowError) as e:
        raise GapFormatError(f"incomplete model document: {e}", path) from None
    if mean.shape != (dim,) or cov.shape != (dim, dim):
        raise GapFormatError(f"mean / cov do not match dim={dim}", path)
    if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov)) and np.isfinite(ridge)):
        raise GapFormatError("model holds non-finite values", path)
    diagnostics = data.get('diagnostics', {})
    if not isinstance(diagnostics, dict):
        raise GapFormatError("'diagnostics' must be a mapping", path)

    return GaussianModel.from_moments(mean, cov, ridge, diagnostics)
