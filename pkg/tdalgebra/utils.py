from __future__ import annotations

import functools
import inspect

from typing import Optional, Tuple, Type

from tdalgebra.exceptions import RegistryError

# Prefix of the base generators, x1 ... xv
GENERATOR_PREFIX = "x"

# Textual name of the formal weight λ
WEIGHT_SYMBOL = "L"

# Number of base generators when neither --vars nor the environment says otherwise
DEFAULT_VARS = 2

# Environment variable holding the default number of base generators
VARS_ENV = "TDALGEBRA_VARS"

# The maximum number of terms to display in a __repr__
REPR_OUTPUT_SIZE = 20

# Random law-check harness defaults
DEFAULT_TRIALS = 200
DEFAULT_MAX_DEGREE = 5
DEFAULT_MAX_LENGTH = 4
MAX_SAMPLE_WORDS = 3

Monomial = Tuple[int, ...]
Word = Tuple[Monomial, ...]


def word_key(word: Word) -> tuple:
    """Canonical word order: length first, then letters lexicographically"""
    return (len(word), word)


class RegisterMixin:
    """
    Base class to register named subclasses. The attribute holding the
    name of a subclass is given by ``registry_attribute``
    """

    registry_attribute = "name"

    @classmethod
    def _get_registered(cls, name: str) -> Optional[Type]:
        return cls.get_registered().get(name, None)

    @classmethod
    @functools.lru_cache()
    def get_registered(cls) -> dict:
        class_registry = [
            parent.__dict__.get("class_registry", {}) for parent in inspect.getmro(cls)
        ]
        return cls.merge_dicts(class_registry)

    @classmethod
    def get(cls, name: str) -> Type:
        """Return the registered class called ``name``"""
        registered = cls._get_registered(name)
        if registered is None:
            choices = ", ".join(sorted(cls.get_registered()))
            raise KeyError(f"unknown {cls.__name__} '{name}' (choose from {choices})")
        return registered

    @classmethod
    def register_subclass(cls, item: Type, name: Optional[str] = None):
        if not (inspect.isclass(item) and issubclass(item, cls)):
            raise RegistryError(f"'{item}' is not a subclass of {cls.__name__}")
        if name is None:
            name = getattr(item, cls.registry_attribute)
        if "class_registry" not in cls.__dict__:
            cls.class_registry = {}
        cls.class_registry[name] = item
        cls.get_registered.cache_clear()
        return item

    @staticmethod
    def merge_dicts(dicts):
        """Registries along the MRO, the closest class wins on a name clash"""
        merged: dict = {}
        for registry in reversed(dicts):
            merged.update(registry)
        return merged
