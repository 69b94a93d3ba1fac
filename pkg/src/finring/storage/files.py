"""Ring and group files.  Loading always re-validates the tables, so a tampered file raises the
axiom violation it contains instead of producing a broken ring."""

import json
import logging
from pathlib import Path
from typing import Union

from finring.groups import FiniteGroup, validate_group
from finring.rings import FiniteRing, validate_ring
from finring.storage.json import dumps
from finring.util import DEFAULT_LIMITS, FinringError, Limits


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class MalformedFile(FinringError):
    pass


def _read(path: PathLike, required: tuple) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as ex:
            raise MalformedFile(f"{path} is not JSON: {ex}") from ex
    if not isinstance(raw, dict):
        raise MalformedFile(f"{path} does not hold a JSON object")
    missing = [key for key in required if key not in raw]
    if missing:
        raise MalformedFile(f"{path} is missing {', '.join(missing)}")
    return raw


def save_ring(ring: FiniteRing, path: PathLike) -> None:
    logger.debug("writing %s to %s", ring.label, path)
    Path(path).write_text(dumps(ring) + "\n", encoding="utf-8")


def load_ring(path: PathLike, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Reads a ring file and validates it.

    Raises:
        MalformedFile: the file is not a JSON ring object.
        AxiomViolation: the tables are not a ring.
        SizeCapExceeded: the ring is larger than limits.size_cap.

    Returns:
        FiniteRing -- The validated ring, labelled as in the file.
    """
    raw = _read(path, ("order", "zero", "one", "add", "mul"))
    logger.debug("validating ring file %s", path)
    return validate_ring(
        int(raw["order"]),
        raw["add"],
        raw["mul"],
        int(raw["zero"]),
        int(raw["one"]),
        str(raw.get("label", "")),
        limits,
    )


def save_group(group: FiniteGroup, path: PathLike) -> None:
    Path(path).write_text(dumps(group) + "\n", encoding="utf-8")


def load_group(path: PathLike, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    raw = _read(path, ("order", "identity", "cayley"))
    group = validate_group(raw["cayley"], int(raw["identity"]), str(raw.get("label", "")), limits)
    if group.order != int(raw["order"]):
        raise MalformedFile(f"{path} declares order {raw['order']} but holds {group.order} elements")
    return group
