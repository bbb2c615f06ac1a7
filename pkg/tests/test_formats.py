import io
import json
import logging

import numpy as np
import pytest

from conftest import build_grid
from fea2vr import formats, pipeline
from fea2vr.errors import VrMeshFormatError
from fea2vr.synthetic import HexGrid, unit_cube


def write_bytes(mesh, report=None):
    sink = io.BytesIO()
    formats.write_vrmesh(mesh, report, sink)
    return sink.getvalue()


def read_mesh(data: bytes):
    return formats.read_vrmesh(io.BytesIO(data))


def assert_meshes_equal(a, b):
    assert np.array_equal(a.vertices, b.vertices)
    assert np.array_equal(a.triangles, b.triangles)
    assert np.array_equal(a.normals, b.normals)
    assert np.array_equal(a.node_id_map, b.node_id_map)
    assert set(a.fields) == set(b.fields)
    for name in a.fields:
        fa, fb = a.fields[name], b.fields[name]
        assert fa.values == fb.values
        assert (fa.min, fa.max, fa.units) == (fb.min, fb.max, fb.units)


@pytest.fixture
def cube_with_field(cube_mesh):
    raw = {i: float(i) * 0.1 for i in range(1, 9)}
    cube_mesh.fields["TEMP"] = pipeline.remap_field(
        "TEMP", raw, cube_mesh.node_id_map, units="degC"
    )
    return cube_mesh


class TestWrite:
    def test_cube_document_shape(self, cube_mesh):
        document = json.loads(write_bytes(cube_mesh))
        assert document["format"] == "vrmesh"
        assert document["version"] == 1
        assert len(document["vertices"]) == 8
        assert len(document["triangles"]) == 12
        assert len(document["normals"]) == 8
        assert document["node_id_map"] == list(range(1, 9))

    def test_key_order_is_canonical(self, cube_mesh):
        raw = write_bytes(cube_mesh).decode()
        keys = list(json.loads(raw).keys())
        assert keys == list(formats._DOCUMENT_KEYS)
        positions = [raw.index(f'"{k}"') for k in keys]
        assert positions == sorted(positions)

    def test_single_trailing_newline(self, cube_mesh):
        data = write_bytes(cube_mesh)
        assert data.endswith(b"\n") and not data.endswith(b"\n\n")

    def test_field_lengths(self, cube_with_field):
        document = json.loads(write_bytes(cube_with_field))
        assert len(document["fields"]["TEMP"]["values"]) == 8
        assert document["fields"]["TEMP"]["units"] == "degC"

    def test_deterministic_bytes(self):
        grid = HexGrid(2, 2, 2)
        a, report_a = build_grid(grid, optimized=True)
        b, report_b = build_grid(grid, optimized=True)
        assert write_bytes(a, report_a) == write_bytes(b, report_b)

    def test_non_finite_rejected(self, cube_mesh):
        cube_mesh.vertices[0, 0] = np.inf
        with pytest.raises(VrMeshFormatError):
            write_bytes(cube_mesh)


class TestRoundTrip:
    def test_cube(self, cube_with_field):
        again = read_mesh(write_bytes(cube_with_field))
        assert_meshes_equal(cube_with_field, again)

    def test_grid_with_missing_values(self):
        grid = HexGrid(2, 2, 2)
        mesh, report = build_grid(grid, optimized=True)
        raw = {nid: float(nid) for nid in list(grid.boundary_node_ids())[:20]}
        mesh.fields["U"] = pipeline.remap_field("U", raw, mesh.node_id_map, fill_missing=True)
        again = read_mesh(write_bytes(mesh, report))
        assert_meshes_equal(mesh, again)
        assert None in again.fields["U"].values

    def test_empty_mesh(self):
        mesh, report = pipeline.build_mesh(
            [], [], {}, options=pipeline.BuildOptions(allow_empty=True)
        )
        again = read_mesh(write_bytes(mesh, report))
        assert again.vertex_count == 0 and again.triangle_count == 0

    def test_written_documents_read_without_warnings(self, cube_with_field, caplog):
        data = write_bytes(cube_with_field)
        with caplog.at_level(logging.WARNING, logger="fea2vr.formats"):
            read_mesh(data)
        assert caplog.records == []

    def test_reread_is_bit_stable(self, cube_with_field):
        data = write_bytes(cube_with_field)
        again = read_mesh(data)
        assert write_bytes(again) == data


class TestReadValidation:
    def _document(self, **overrides):
        mesh, report = build_grid(unit_cube(), optimized=False)
        document = formats.document_from_mesh(mesh, report)
        document.update(overrides)
        return document

    def _read(self, document):
        return read_mesh(json.dumps(document).encode())

    def test_empty_file(self):
        with pytest.raises(VrMeshFormatError, match="empty"):
            read_mesh(b"")

    def test_not_json(self):
        with pytest.raises(VrMeshFormatError, match="JSON"):
            read_mesh(b"v 0 0 0\nf 1 2 3\n")

    def test_wrong_version(self):
        with pytest.raises(VrMeshFormatError, match="version"):
            self._read(self._document(version=2))

    def test_wrong_format(self):
        with pytest.raises(VrMeshFormatError, match="format"):
            self._read(self._document(format="objish"))

    def test_triangle_index_out_of_range(self):
        document = self._document()
        document["triangles"][5] = [0, 1, 99]
        with pytest.raises(VrMeshFormatError, match="triangle 5 index out of range"):
            self._read(document)

    def test_normals_length_mismatch(self):
        document = self._document()
        document["normals"] = document["normals"][:-1]
        with pytest.raises(VrMeshFormatError, match="normals"):
            self._read(document)

    def test_node_id_map_duplicates(self):
        document = self._document()
        document["node_id_map"][0] = document["node_id_map"][1]
        with pytest.raises(VrMeshFormatError, match="node_id_map"):
            self._read(document)

    def test_non_finite_vertex(self):
        document = self._document()
        document["vertices"][3][1] = 1e999  # json parses this as Infinity
        with pytest.raises(VrMeshFormatError, match=r"vertices\[3\]"):
            read_mesh(json.dumps(document).encode())

    def test_field_length_mismatch(self):
        document = self._document()
        document["fields"] = {"TEMP": {"values": [1.0], "min": 1.0, "max": 1.0}}
        with pytest.raises(VrMeshFormatError, match="TEMP"):
            self._read(document)

    def test_unknown_key_warns(self, caplog):
        document = self._document(extra_stuff=1)
        with caplog.at_level(logging.WARNING, logger="fea2vr.formats"):
            self._read(document)
        assert any("extra_stuff" in r.message for r in caplog.records)


class TestObj:
    def _lines(self, mesh):
        sink = io.BytesIO()
        formats.write_obj(mesh, sink)
        return sink.getvalue().decode().splitlines()

    def test_single_triangle(self):
        from test_geometry import make_mesh

        mesh = make_mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)])
        lines = self._lines(mesh)
        assert sum(1 for l in lines if l.startswith("v ")) == 3
        assert sum(1 for l in lines if l.startswith("vn ")) == 3
        assert [l for l in lines if l.startswith("f ")] == ["f 1//1 2//2 3//3"]

    def test_cube(self, cube_mesh):
        lines = self._lines(cube_mesh)
        assert sum(1 for l in lines if l.startswith("v ")) == 8
        assert sum(1 for l in lines if l.startswith("vn ")) == 8
        assert sum(1 for l in lines if l.startswith("f ")) == 12

    def test_empty_mesh_header_only(self):
        mesh, _ = pipeline.build_mesh([], [], {}, options=pipeline.BuildOptions(allow_empty=True))
        lines = self._lines(mesh)
        assert lines == ["# exported by fea2vr"]
