"""
-------------------------------------------------
gapkit - Logger class for console and file logging
-------------------------------------------------
"""

from enum import Enum
from typing import Dict, List, Optional, Union
import os, sys, time

from .Config import Config

LOG_FILE = 'gapkit.log'


def format_seconds(seconds: float) -> str:
    m, s = divmod(int(seconds), 60)
    h, m = divmod(m, 60)
    if h > 0:
        return "%d:%02d:%02d" % (h, m, s)
    return "%d:%02d" % (m, s)


class MLogLevel(str, Enum):
    NOTICE = 'NOTICE'
    WARNING = 'WARNING'
    ERROR = 'ERROR'
    DEBUG = 'DEBUG'

    # print level
    def __str__(self):
        return self.name


class MLog:

    def __init__(self, config: Config) -> None:
        self.config: Config = config
        self.started: bool = False

        # echo messages to stderr (--print); keep DEBUG messages (--debug)
        self.echo: bool = bool(config['print'])
        self.debug: bool = config.debug

        self.steps: List[str] = []
        self.module: Optional[str] = None
        self.progress: int = 0

        self.timing: Dict[str, Dict[str, Optional[float]]] = {}
        self.t0: Optional[float] = None

        self.log_cache: List[str] = []

    def registerModule(self, module: str) -> None:
        assert not self.started, "Cannot register modules after starting."
        self.steps.append(module)

    def start(self) -> None:
        self.t0 = time.time()
        self.started = True

    def startModule(self, module: str) -> None:
        assert self.started, "Cannot start module before starting the logger."
        assert module in self.steps, "Cannot start module that is not registered."
        assert self.module is None, "Cannot start module if another module is already started."

        self.module = module
        self.timing[module] = {'start': time.time(), 'stop': None}
        self.log(f"{self.progress + 1}/{len(self.steps)} {module}", level=MLogLevel.DEBUG)

    def finishModule(self, module: str) -> None:
        assert self.started, "Cannot finish module before starting the logger."
        assert self.module == module, "Cannot finish module that is not the current module."

        self.timing[module]['stop'] = time.time()
        elapsed = self.timing[module]['stop'] - self.timing[module]['start']
        self.log(f"{module} done ({format_seconds(elapsed)})", level=MLogLevel.DEBUG)

        self.module = None
        self.progress += 1

    @property
    def duration(self) -> float:
        """Wall-clock seconds since start()."""
        return 0.0 if self.t0 is None else time.time() - self.t0

    def log(self, *args, level: Union[str, MLogLevel] = MLogLevel.NOTICE) -> None:
        """Log a message.

        All messages are cached and written to gapkit.log in the output directory
        once the run finishes. `Module.log()` calls are routed here.

        --print
            additionally echo every message to stderr (stdout is reserved for
            command results and the error object).

        --debug
            keep DEBUG messages (module start / finish timing); they are dropped
            otherwise.
        """
        if isinstance(level, str):
            level = MLogLevel(level)

        if level == MLogLevel.DEBUG and not self.debug:
            return

        timestamp = time.strftime("%d.%m.%y %H:%M:%S", time.localtime(time.time()))
        scope = f"{self.module}: " if self.module else ""
        msg = " ".join([str(arg) for arg in args])
        msg = f"[{str(level)}|{timestamp}]: {scope}{msg}"

        self.log_cache.append(msg)
        if self.echo:
            print(msg, file=sys.stderr)

    def export(self, directory: str) -> Optional[str]:
        """Write the cached messages to `directory/gapkit.log`; returns the path."""
        if not self.log_cache:
            return None
        os.makedirs(directory, exist_ok=True)
        path = os.path.join(directory, LOG_FILE)
        with open(path, 'a', encoding='utf-8') as f:
            for msg in self.log_cache:
                f.write(msg + "\n")
        self.log_cache = []
        return path
