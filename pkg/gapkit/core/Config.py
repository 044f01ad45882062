"""
-------------------------------------------------
gapkit - Config / run configuration
-------------------------------------------------

Sources, later ones override earlier ones:
  1. base config (below)
  2. YAML config file (--config path.yml)
  3. explicit dict (built from CLI flags)
  4. --config:section.key=value arguments
-------------------------------------------------
"""

from typing import TYPE_CHECKING, Union, Optional, Type, Any, List
import copy, os, json, yaml

from .Error import GapDataError, GapFormatError
from .RunData import RunData

if TYPE_CHECKING:
    from .Logger import MLog
    from .Module import Module

BASE_CONFIG = {
    'general': {
        'seed': 0,
        'threads': 1,
        'out': '.',
        'print': False,
        'debug': False,
    },
    'modules': {}
}


def dict_merge(source: dict, destination: dict) -> dict:
    for k, v in source.items():
        if isinstance(v, dict):
            n = destination.setdefault(k, {})
            dict_merge(v, n)
        else:
            destination[k] = v
    return destination


def parse_value(value: str, allow_json_type_parsing: bool = True) -> Any:
    if value == 'None':
        return None
    elif value == 'True' or value == 'False':
        return value == 'True'
    elif value.isnumeric():
        return int(value)
    elif value.replace('.', '', 1).isnumeric():
        return float(value)
    elif allow_json_type_parsing:
        try:
            return json.loads(value)
        except json.JSONDecodeError:
            return value
    return value


def config_argument_parser(args: List[str], allow_json_type_parsing: bool = True) -> dict:
    # NOTE: to pass a json list, quote the whole argument: "--config:modules.GapProcessor.fractions=[0.5, 1.0]"
    config: dict = {}
    for arg in args:
        if not arg.startswith('--config:'):
            continue
        if '=' not in arg:
            raise GapDataError(f"config override '{arg}' needs the form --config:key.path=value")

        keypath, value = arg[9:].split('=', maxsplit=1)
        edges = keypath.split('.')

        _config = config
        for p in edges[:-1]:
            _config = _config.setdefault(p, {})
        _config[edges[-1]] = parse_value(value, allow_json_type_parsing)

    return config


class Config:

    def __init__(self, config_file: Optional[str] = None, config: Optional[dict] = None, args: Optional[List[str]] = None) -> None:
        self._logger: Optional['MLog'] = None
        self._config: dict = copy.deepcopy(BASE_CONFIG)

        if config_file is not None:
            if not os.path.isfile(config_file):
                raise GapFormatError("config file not found", config_file)
            with open(config_file, 'r', encoding='utf-8') as f:
                try:
                    file_config = yaml.safe_load(f) or {}
                except (yaml.YAMLError, ValueError) as e:
                    raise GapFormatError(f"invalid YAML: {e}", config_file) from None
            if not isinstance(file_config, dict):
                raise GapFormatError("config file must be a YAML mapping", config_file)
            for section in ('general', 'modules'):
                if not isinstance(file_config.get(section, {}), dict):
                    raise GapFormatError(f"config section '{section}' must be a mapping", config_file)
            self._config = dict_merge(file_config, self._config)

        # explicit configuration (CLI flags)
        if config is not None:
            self._config = dict_merge(config, self._config)

        # --config:key=value overrides
        if args is not None:
            self._config = dict_merge(config_argument_parser(args), self._config)

        if not isinstance(self._config.get('modules'), dict):
            raise GapDataError("config section 'modules' must be a mapping")

        self.data = RunData()

    def __getitem__(self, key: Union[str, Type['Module']]) -> Any:
        if isinstance(key, str) and key in self._config['general']:
            return self._config['general'][key]
        elif isinstance(key, type) and key.__name__ in self._config['modules']:
            return self._config['modules'][key.__name__]
        else:
            raise KeyError(f"Config key '{key}' not found.")

    @property
    def workers(self) -> int:
        threads = self['threads']
        if not isinstance(threads, int) or isinstance(threads, bool) or threads < 1:
            raise GapDataError(f"threads must be a positive integer, got {threads}")
        return threads

    @property
    def seed(self) -> int:
        seed = self['seed']
        if not isinstance(seed, int) or isinstance(seed, bool) or not (0 <= seed < 2 ** 64):
            raise GapDataError(f"seed must be an unsigned 64-bit integer, got {seed}")
        return seed

    def checkGeneral(self) -> None:
        """Validate the execution settings (threads, seed) before any work starts."""
        self.workers
        self.seed

    @property
    def debug(self) -> bool:
        return bool(self['debug'])

    @property
    def logger(self) -> Optional['MLog']:
        return self._logger

    def useLogger(self, logger: 'MLog') -> None:
        self._logger = logger

