import pytest

from fea2vr import listing, model, pipeline
from fea2vr.synthetic import HexGrid, unit_cube

# The element rows quoted from a real solver export (EL MAT TYP REL ESY SEC NODES).
SHELL_ROWS = """\
EL	MAT	TYP	REL	ESY	SEC	NODES
21	1	2	1	0	21	23	24	65	65
22	1	2	1	0	22	22	23	60	60
23	1	2	1	0	23	80	26	27	27
24	1	2	1	0	24	64	22	60	60
"""


def build_grid(grid: HexGrid, optimized: bool, **options):
    nodes, _ = listing.parse_node_list(grid.node_list_text())
    elements, _ = listing.parse_element_list(grid.element_list_text(), {1: 8})
    surface = None
    if optimized:
        surface, _ = listing.parse_surface_node_list(grid.surface_node_list_text())
    return pipeline.build_mesh(
        nodes,
        elements,
        model.DEFAULT_TYPE_MAPPING,
        surface,
        pipeline.BuildOptions(**options),
    )


@pytest.fixture
def cube_mesh():
    mesh, _report = build_grid(unit_cube(), optimized=False)
    return mesh


@pytest.fixture
def cube_listing_files(tmp_path):
    cube = unit_cube()
    paths = {
        "nodes": tmp_path / "nodes.txt",
        "elements": tmp_path / "elements.txt",
        "surface": tmp_path / "surface.txt",
        "results": tmp_path / "temp.txt",
    }
    paths["nodes"].write_text(cube.node_list_text())
    paths["elements"].write_text(cube.element_list_text())
    paths["surface"].write_text(cube.surface_node_list_text())
    paths["results"].write_text(
        cube.result_list_text({i: float(10 * i) for i in range(1, 9)})
    )
    return paths
