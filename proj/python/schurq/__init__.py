"""Python access to the schurq library. Documents come back as dicts."""

import json

from . import _core
from ._core import CombinatError, RingError, hom_dim, hook_content, kostka, partitions, schur_dim

__all__ = [
    "CombinatError",
    "RingError",
    "cauchy",
    "ext1",
    "hom_dim",
    "hook_content",
    "kostka",
    "module",
    "partitions",
    "ringel",
    "schur_dim",
    "tilting",
    "verify_hwc",
]


def module(kind, parts, n, ring="Q"):
    """Rank, weight multiplicities and basis labels of gamma/sym/ext/delta/nabla/weyl/schur/simple."""
    return json.loads(_core.module_json(kind, list(parts), n, ring))


def ext1(source, source_parts, target, target_parts, n, ring="Q"):
    return json.loads(_core.ext1_json(source, list(source_parts), target, list(target_parts), n, ring))


def cauchy(mu, n, ring="Q"):
    return json.loads(_core.cauchy_json(list(mu), n, ring))


def verify_hwc(n, d, ring="Q"):
    return json.loads(_core.verify_hwc_json(n, d, ring))


def tilting(n, d, ring="Q"):
    return json.loads(_core.tilting_json(n, d, ring))


def ringel(n, d, ring="Q"):
    return json.loads(_core.ringel_json(n, d, ring))
