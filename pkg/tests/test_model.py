import pytest
from hypothesis import given
from hypothesis import strategies as st

from fea2vr.errors import ElementError
from fea2vr.listing import ElementRecord
from fea2vr.model import (
    DEFAULT_TYPE_MAPPING,
    ElementClass,
    NodeMap,
    classify,
    compute_node_map,
    expected_node_counts,
    parse_type_mapping,
)


def record(type_ref, node_ids, eid=1):
    return ElementRecord(
        id=eid, material=1, type_ref=type_ref, real_const=1, esys=0, section=eid,
        node_ids=tuple(node_ids),
    )


class TestClassify:
    def test_shell_with_degenerate_quad(self):
        element = classify(record(2, [22, 23, 60, 60]), {2: ElementClass.SHELL})
        assert element.element_class is ElementClass.SHELL
        assert element.distinct_node_count == 3
        assert element.node_map == NodeMap(0, 4)

    def test_hex(self):
        element = classify(record(1, range(1, 9)), {1: ElementClass.HEX8})
        assert element.element_class is ElementClass.HEX8

    def test_unmapped_is_unsupported(self):
        element = classify(record(7, [1, 2, 3, 4]), {})
        assert element.element_class is ElementClass.UNSUPPORTED

    def test_shell_too_few_distinct(self):
        with pytest.raises(ElementError) as exc:
            classify(record(2, [5, 5, 6, 6], eid=42), {2: ElementClass.SHELL})
        assert "42" in str(exc.value)

    def test_shell_too_many_distinct(self):
        with pytest.raises(ElementError):
            classify(record(2, [1, 2, 3, 4, 5]), {2: ElementClass.SHELL})

    def test_hex_wrong_length(self):
        with pytest.raises(ElementError):
            classify(record(1, range(1, 8)), {1: ElementClass.HEX8})

    def test_solid92_wrong_length(self):
        with pytest.raises(ElementError):
            classify(record(3, range(1, 9)), {3: ElementClass.SOLID92})

    def test_deterministic(self):
        r = record(1, range(1, 9))
        assert classify(r, DEFAULT_TYPE_MAPPING) == classify(r, DEFAULT_TYPE_MAPPING)


class TestNodeMap:
    def test_skip_pattern_from_edge_element(self):
        # Hex on a model edge: nodes 1 and 4 inner, the rest on the surface.
        element = classify(record(1, range(1, 9)), DEFAULT_TYPE_MAPPING)
        node_map = compute_node_map(element, {2, 3, 5, 6, 7, 8})
        assert node_map.bits == 9  # 0b00001001
        assert node_map.width == 8

    def test_surface_superset_keeps_all(self):
        element = classify(record(2, [4, 9, 12, 12]), DEFAULT_TYPE_MAPPING)
        assert compute_node_map(element, {4, 9, 12, 99}).bits == 0

    def test_empty_surface_masks_all(self):
        element = classify(record(1, range(1, 9)), DEFAULT_TYPE_MAPPING)
        assert compute_node_map(element, set()).bits == 255

    def test_width_validation(self):
        with pytest.raises(ValueError):
            NodeMap(bits=16, width=4)

    def test_skips(self):
        node_map = NodeMap(0b1010, 4)
        assert [node_map.skips(i) for i in range(4)] == [False, True, False, True]


@given(
    nodes=st.lists(st.integers(min_value=1, max_value=30), min_size=8, max_size=8),
    surface=st.sets(st.integers(min_value=1, max_value=30)),
    extra=st.sets(st.integers(min_value=1, max_value=30)),
)
def test_enlarging_surface_never_sets_a_bit(nodes, surface, extra):
    element = classify(record(1, nodes), DEFAULT_TYPE_MAPPING)
    small = compute_node_map(element, surface)
    large = compute_node_map(element, surface | extra)
    assert large.bits & ~small.bits == 0
    assert 0 <= large.bits <= 255


class TestTypeMapping:
    def test_default(self):
        assert parse_type_mapping(None) == {
            1: ElementClass.HEX8,
            2: ElementClass.SHELL,
        }

    def test_explicit(self):
        mapping = parse_type_mapping(["1=hex8", "2=shell", "3=solid92"])
        assert mapping[3] is ElementClass.SOLID92

    def test_bad_pair(self):
        with pytest.raises(ValueError):
            parse_type_mapping(["hex8"])

    def test_bad_class(self):
        with pytest.raises(ValueError):
            parse_type_mapping(["1=pyramid"])

    def test_bad_typ(self):
        with pytest.raises(ValueError):
            parse_type_mapping(["one=hex8"])

    def test_expected_node_counts(self):
        mapping = parse_type_mapping(["1=hex8", "2=shell", "3=solid92"])
        assert expected_node_counts(mapping) == {1: 8, 3: 10}
