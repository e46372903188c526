"""Shared construction cache for the service process.

Groups and pairs are expensive to enumerate but immutable once built, so
they are cached across requests, keyed by the canonical JSON of their
spec.  The enumeration cap can be overridden with the GELFAND_CAP
environment variable.
"""

from __future__ import annotations

import json
import os
import threading
from collections import OrderedDict

from .. import presets
from ..grouptab import DEFAULT_CAP, GroupTable, Subgroup, group_from_spec
from ..pairs import PairData

_MAX_ENTRIES = 32
_lock = threading.Lock()
_groups: OrderedDict[str, GroupTable] = OrderedDict()
_pairs: OrderedDict[str, PairData] = OrderedDict()
_pair_groups: OrderedDict[str, tuple] = OrderedDict()


def current_cap() -> int:
    raw = os.environ.get("GELFAND_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _key(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True)


def _cached(store: OrderedDict, key: str, build):
    with _lock:
        if key in store:
            store.move_to_end(key)
            return store[key]
    value = build()
    with _lock:
        store[key] = value
        while len(store) > _MAX_ENTRIES:
            store.popitem(last=False)
    return value


def get_group(spec: dict) -> GroupTable:
    return _cached(_groups, _key(spec),
                   lambda: group_from_spec(spec, cap=current_cap()))


def get_pair(spec: dict) -> PairData:
    return _cached(_pairs, _key(spec),
                   lambda: presets.pair_from_spec(cap=current_cap(), **spec))


def get_pair_groups(spec: dict) -> tuple[GroupTable, Subgroup, str]:
    return _cached(_pair_groups, _key(spec),
                   lambda: presets.pair_groups_from_spec(cap=current_cap(), **spec))
