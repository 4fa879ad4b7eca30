"""Computational engine for the finite p-groups J, H, K of the Macdonald family."""

from .pcgroup import (
    Element,
    Group,
    GroupParams,
    InvalidParameters,
    MixedGroupError,
    make_group,
)

__version__ = "0.1.0"

__all__ = [
    "Element",
    "Group",
    "GroupParams",
    "InvalidParameters",
    "MixedGroupError",
    "make_group",
    "__version__",
]
