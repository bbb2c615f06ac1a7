import numpy as np
import pytest

from fea2vr.geometry import IssueKind, face_normal, stats, validate, vertex_normals
from fea2vr.mesh import ScalarField, VrMesh


def make_mesh(vertices, triangles, fields=None):
    vertices = np.asarray(vertices, dtype=np.float64)
    triangles = np.asarray(triangles, dtype=np.int64).reshape(-1, 3)
    return VrMesh(
        vertices=vertices,
        triangles=triangles,
        normals=vertex_normals(vertices, triangles),
        node_id_map=np.arange(1, len(vertices) + 1, dtype=np.int64),
        fields=fields or {},
    )


class TestFaceNormal:
    def test_right_hand_rule(self):
        n = face_normal((0, 0, 0), (1, 0, 0), (0, 1, 0))
        assert np.allclose(n, (0, 0, 1))

    def test_reversed_winding(self):
        n = face_normal((0, 0, 0), (0, 1, 0), (1, 0, 0))
        assert np.allclose(n, (0, 0, -1))

    def test_collinear_degenerate(self):
        assert face_normal((0, 0, 0), (1, 0, 0), (2, 0, 0)) is None

    def test_coincident_degenerate(self):
        assert face_normal((1, 1, 1), (1, 1, 1), (1, 1, 1)) is None

    def test_rotation_equivariance(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
            if np.linalg.det(q) < 0:
                q[:, 0] = -q[:, 0]
            p = rng.standard_normal((3, 3))
            n = face_normal(*p)
            rotated = face_normal(*(p @ q.T))
            assert np.allclose(rotated, q @ n, atol=1e-9)


class TestVertexNormals:
    def test_flat_plate(self):
        vertices = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (2, 0, 0), (2, 1, 0)]
        triangles = [(0, 1, 2), (0, 2, 3), (1, 4, 5), (1, 5, 2)]
        normals = vertex_normals(np.array(vertices, float), np.array(triangles))
        assert np.allclose(normals, [(0, 0, 1)] * 6)

    def test_single_triangle(self):
        vertices = np.array([(0, 0, 0), (1, 0, 0), (0, 1, 0)], float)
        normals = vertex_normals(vertices, np.array([(0, 1, 2)]))
        face = face_normal(*vertices)
        for n in normals:
            assert np.allclose(n, face)

    def test_cube_points_outward(self, cube_mesh):
        center = cube_mesh.vertices.mean(axis=0)
        for vertex, normal in zip(cube_mesh.vertices, cube_mesh.normals):
            assert float(np.dot(normal, vertex - center)) > 0

    def test_unit_length(self, cube_mesh):
        lengths = np.linalg.norm(cube_mesh.normals, axis=1)
        assert np.all(np.abs(lengths - 1.0) < 1e-6)

    def test_isolated_vertex_fallback(self):
        vertices = np.array([(0, 0, 0), (1, 0, 0), (0, 1, 0), (5, 5, 5)], float)
        normals = vertex_normals(vertices, np.array([(0, 1, 2)]))
        assert np.allclose(normals[3], (0, 0, 1))


class TestValidate:
    def test_clean_cube(self, cube_mesh):
        assert validate(cube_mesh) == []

    def test_index_out_of_range(self, cube_mesh):
        bad = VrMesh(
            vertices=cube_mesh.vertices,
            triangles=np.array([[0, 1, 99]], dtype=np.int64),
            normals=cube_mesh.normals,
            node_id_map=cube_mesh.node_id_map,
        )
        issues = validate(bad)
        assert [i.kind for i in issues] == [IssueKind.INDEX_OUT_OF_RANGE]
        assert issues[0].location == 0

    def test_duplicate_triangle(self, cube_mesh):
        triangles = np.vstack([cube_mesh.triangles, cube_mesh.triangles[:1]])
        bad = VrMesh(
            vertices=cube_mesh.vertices,
            triangles=triangles,
            normals=cube_mesh.normals,
            node_id_map=cube_mesh.node_id_map,
        )
        kinds = [i.kind for i in validate(bad)]
        assert kinds == [IssueKind.DUPLICATE_TRIANGLE]

    def test_non_finite_coordinate(self, cube_mesh):
        vertices = cube_mesh.vertices.copy()
        vertices[2, 1] = np.nan
        bad = VrMesh(
            vertices=vertices,
            triangles=cube_mesh.triangles,
            normals=cube_mesh.normals,
            node_id_map=cube_mesh.node_id_map,
        )
        issues = validate(bad)
        assert IssueKind.NON_FINITE_COORDINATE in [i.kind for i in issues]

    def test_degenerate_triangle(self):
        mesh = make_mesh(
            [(0, 0, 0), (1, 0, 0), (2, 0, 0)],
            [(0, 1, 2)],
        )
        issues = validate(mesh)
        assert [i.kind for i in issues] == [IssueKind.DEGENERATE_TRIANGLE]


class TestStats:
    def test_cube_bbox(self, cube_mesh):
        info = stats(cube_mesh)
        assert info.bbox_min == (0.0, 0.0, 0.0)
        assert info.bbox_max == (1.0, 1.0, 1.0)
        assert info.vertex_count == 8
        assert info.triangle_count == 12

    def test_no_fields(self, cube_mesh):
        assert stats(cube_mesh).fields == {}

    def test_field_stats_match_stored(self, cube_mesh):
        field = ScalarField("TEMP", [float(i) for i in range(1, 9)], 1.0, 8.0)
        mesh = VrMesh(
            vertices=cube_mesh.vertices,
            triangles=cube_mesh.triangles,
            normals=cube_mesh.normals,
            node_id_map=cube_mesh.node_id_map,
            fields={"TEMP": field},
        )
        info = stats(mesh)
        assert info.fields["TEMP"]["min"] == field.min
        assert info.fields["TEMP"]["max"] == field.max
        assert info.fields["TEMP"]["mean"] == pytest.approx(4.5)

    def test_empty_mesh(self):
        mesh = make_mesh(np.zeros((0, 3)), np.zeros((0, 3), dtype=np.int64))
        info = stats(mesh)
        assert info.bbox_min is None and info.bbox_max is None


def test_pipeline_meshes_are_structurally_clean(cube_mesh):
    from conftest import build_grid
    from fea2vr.synthetic import HexGrid

    meshes = [
        cube_mesh,
        build_grid(HexGrid(2, 2, 2), optimized=True)[0],
        build_grid(HexGrid(2, 2, 2), optimized=False)[0],  # duplicate faces allowed
    ]
    for mesh in meshes:
        kinds = {i.kind for i in validate(mesh)}
        assert IssueKind.INDEX_OUT_OF_RANGE not in kinds
        assert IssueKind.NON_FINITE_COORDINATE not in kinds
