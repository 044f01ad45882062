"""
-------------------------------------------------
gapkit - IO decorators for configurable module
         attributes
-------------------------------------------------
"""

from typing import Any, TypeVar, Callable, List, Optional, Type
from typing_extensions import get_origin

from .Module import Module
from .Error import GapDataError

T = TypeVar('T', bound=Module)
V = TypeVar('V')
W = TypeVar('W')

# attributes every Module sets or defines itself
RESERVED = frozenset({'label', 'config', 'local_config', 'log', 'c', 'workers'})


class IOConfigError(Exception):
    """A module declares a configurable attribute inconsistently."""
    pass


# factory tools
class F:
    @staticmethod
    def list(func: Callable[[Any], V]) -> Callable[[List[Any]], List[V]]:
        def list_factory(l: List[Any]) -> List[V]:
            if not isinstance(l, (list, tuple)):
                raise TypeError(f"expected a list, got {type(l).__name__}")
            return [func(x) for x in l]
        return list_factory


class IO:

    # factory tools
    F = F()

    @classmethod
    def Config(cls: Type['IO'], name: str, type: Type[V], default: W, factory: Callable[[W], V] = lambda x: x, the: Optional[str] = None) -> Callable[[Type[T]], Type[T]]:
        """Declare a configurable attribute.

        Lookup order: local config (CLI) > `modules.<ClassName>` config section > default.
        `factory` converts the raw value; a None value bypasses the factory.
        """

        def wrapper(dcls: Type[T]) -> Type[T]:

            if name in RESERVED:
                raise IOConfigError(f"Class {dcls.__name__} cannot declare '{name}' configurable, the name is reserved by Module")

            if name not in dcls.__annotations__:
                raise IOConfigError(f"Class {dcls.__name__} does not have attribute {name}")

            if dcls.__annotations__[name] != type:
                raise IOConfigError(f"Configurable attribute '{name}' must be of type {type}")

            if default is not None and not isinstance(factory(default), get_origin(type) or type):
                raise IOConfigError(f"Default value of '{name}' must be of type {type}")

            # getter: cached > config > default
            def getAttr(self: T, attr_name=name) -> V:
                clsattr = "_gapkit_configurable__" + attr_name
                if not hasattr(self, clsattr):
                    raw = self.getConfiguration(attr_name, default)
                    try:
                        value = None if raw is None else factory(raw)
                    except (TypeError, ValueError) as e:
                        raise GapDataError(f"invalid value {raw!r} for {self.label}.{attr_name}: {e}") from None
                    if value is not None and not isinstance(value, get_origin(type) or type):
                        raise GapDataError(f"{self.label}.{attr_name} must be of type {getattr(type, '__name__', type)}, got {raw!r}")
                    setattr(self, clsattr, value)
                return getattr(self, clsattr)

            def setAttr(self: T, value: V, attr_name=name):
                if value is not None and not isinstance(value, get_origin(type) or type):
                    raise IOConfigError(f"Configurable attribute must be of type {type}")
                setattr(self, "_gapkit_configurable__" + attr_name, value)

            prop: property = property(getAttr, setAttr, doc=the)
            setattr(dcls, name, prop)

            return dcls

        return wrapper
