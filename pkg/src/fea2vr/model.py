"""Element classification and per-element node maps.

The TYP column of an element listing is a reference into a model-specific
element-type table, so the mapping from TYP values to triangulable classes is
supplied by the caller (``--etype 1=hex8 --etype 2=shell`` on the CLI,
defaulting to {1: hex8, 2: shell}).  Unmapped TYP values classify as
UNSUPPORTED and are skipped by the pipeline.

The node map is a bitmask over an element's node list: bit i set means the
node at local position i+1 is absent from the surface-node set and must be
skipped when building the skin.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, Mapping

from .errors import ElementError
from .listing import ElementRecord


class ElementClass(enum.Enum):
    SHELL = "shell"
    HEX8 = "hex8"
    SOLID92 = "solid92"
    UNSUPPORTED = "unsupported"


#: Node-list length enforced per class (None = no fixed length).
NODE_COUNTS: dict[ElementClass, int | None] = {
    ElementClass.SHELL: None,
    ElementClass.HEX8: 8,
    ElementClass.SOLID92: 10,
    ElementClass.UNSUPPORTED: None,
}

DEFAULT_TYPE_MAPPING: dict[int, ElementClass] = {
    1: ElementClass.HEX8,
    2: ElementClass.SHELL,
}


@dataclass(frozen=True)
class NodeMap:
    """Bitmask of element nodes to skip (bit i <-> local node i+1)."""

    bits: int
    width: int

    def __post_init__(self):
        if self.bits >> self.width:
            raise ValueError(f"node map bits 0x{self.bits:x} exceed width {self.width}")

    def skips(self, local_index: int) -> bool:
        return bool(self.bits >> local_index & 1)


@dataclass(frozen=True)
class ClassifiedElement:
    record: ElementRecord
    element_class: ElementClass
    distinct_node_count: int
    node_map: NodeMap


def parse_type_mapping(pairs: list[str] | None) -> dict[int, ElementClass]:
    """Build a TYP->class mapping from ``typ=class`` strings.

    Raises:
        ValueError: on malformed pairs or unknown class names.
    """
    if not pairs:
        return dict(DEFAULT_TYPE_MAPPING)
    mapping: dict[int, ElementClass] = {}
    for pair in pairs:
        typ_text, sep, class_text = pair.partition("=")
        if not sep:
            raise ValueError(f"expected TYP=CLASS, got {pair!r}")
        try:
            typ = int(typ_text)
        except ValueError:
            raise ValueError(f"element type reference must be an integer: {pair!r}") from None
        try:
            mapping[typ] = ElementClass(class_text.strip().lower())
        except ValueError:
            names = ", ".join(c.value for c in ElementClass if c is not ElementClass.UNSUPPORTED)
            raise ValueError(f"unknown element class {class_text!r} (expected one of {names})") from None
    return mapping


def expected_node_counts(mapping: Mapping[int, ElementClass]) -> dict[int, int]:
    """Per-TYP node counts used by the element parser for continuation lines."""
    counts = {}
    for typ, cls in mapping.items():
        count = NODE_COUNTS[cls]
        if count is not None:
            counts[typ] = count
    return counts


def classify(record: ElementRecord, mapping: Mapping[int, ElementClass]) -> ClassifiedElement:
    """Assign an element its triangulable class; node map starts all-zero.

    Raises:
        ElementError: when the node list contradicts the class (shell with
            fewer than 3 or more than 4 distinct nodes, hex without exactly 8
            entries, 10-node tet without exactly 10).
    """
    element_class = mapping.get(record.type_ref, ElementClass.UNSUPPORTED)
    distinct = len(set(record.node_ids))
    count = len(record.node_ids)
    if element_class is ElementClass.SHELL:
        if distinct < 3:
            raise ElementError(
                f"element {record.id}: shell needs at least 3 distinct nodes, has {distinct}",
                element_id=record.id,
            )
        if distinct > 4:
            raise ElementError(
                f"element {record.id}: shell allows at most 4 distinct nodes, has {distinct}",
                element_id=record.id,
            )
    else:
        required = NODE_COUNTS[element_class]
        if required is not None and count != required:
            raise ElementError(
                f"element {record.id}: {element_class.value} requires {required} nodes, "
                f"has {count}",
                element_id=record.id,
            )
    return ClassifiedElement(
        record=record,
        element_class=element_class,
        distinct_node_count=distinct,
        node_map=NodeMap(0, count),
    )


def compute_node_map(element: ClassifiedElement, surface: AbstractSet[int]) -> NodeMap:
    """Mask every element node that is not in the surface-node set.

    Enlarging ``surface`` can only clear bits, never set them.
    """
    bits = 0
    for i, node_id in enumerate(element.record.node_ids):
        if node_id not in surface:
            bits |= 1 << i
    return NodeMap(bits, len(element.record.node_ids))


def with_node_map(element: ClassifiedElement, node_map: NodeMap) -> ClassifiedElement:
    return ClassifiedElement(
        record=element.record,
        element_class=element.element_class,
        distinct_node_count=element.distinct_node_count,
        node_map=node_map,
    )
