from .features import read_csv, write_csv, read_binary, write_binary, read_features, write_features
from .manifests import read_grid_manifest, read_schemes, resolve_scheme, resolve_schemes, resolve_grid
from .models import save_model, load_model
from .reports import read_per_item
