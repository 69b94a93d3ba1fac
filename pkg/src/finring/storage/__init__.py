"""Ring and group files, the JSON encoder every command writes with, and the classification
cache."""

from finring.storage.json import FinringEncoder, dumps
from finring.storage.files import MalformedFile, load_group, load_ring, save_group, save_ring
from finring.storage.cache import ClassificationCache

__all__ = [
    "ClassificationCache",
    "FinringEncoder",
    "MalformedFile",
    "dumps",
    "load_group",
    "load_ring",
    "save_group",
    "save_ring",
]
