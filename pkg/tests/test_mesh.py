import csv
import math
import time

import numpy as np
import pytest

from rotsurf.mesh import ATTR_NAMES, GridSpec, build_mesh, read_obj, write_csv, write_obj
from rotsurf.surfaces import tl_surface

S = tl_surface()


def test_small_grid_counts():
    m = build_mesh(S, GridSpec(1.0, 2.0, 3, 0.0, 1.0, 3))
    assert len(m.vertices) == 9 and len(m.faces) == 8
    assert m.faces.min() == 0 and m.faces.max() == 8


def test_winding_follows_u_then_v():
    m = build_mesh(S, GridSpec(1.0, 2.0, 3, 0.0, 1.0, 4))
    for a, b, c in m.faces:
        # each triangle is positively oriented in the (u, v) plane
        e1, e2 = m.uv[b] - m.uv[a], m.uv[c] - m.uv[a]
        assert e1[0] * e2[1] - e1[1] * e2[0] > 0


def test_excluded_rows_dropped():
    m = build_mesh(S, GridSpec(-1.0, 1.0, 5, 0.0, 1.0, 3))
    assert len(m.vertices) == 12
    assert np.all(np.abs(m.uv[:, 0]) >= 1e-3)
    # the gap at u = 0 is not bridged
    assert len(m.faces) == 2 * 2 * 2
    with pytest.raises(ValueError):
        build_mesh(S, GridSpec(-1e-4, 1e-4, 3, 0.0, 1.0, 3))


@pytest.mark.parametrize("args", [
    (1.0, 1.0, 3, 0.0, 1.0, 3), (1.0, 2.0, 1, 0.0, 1.0, 3), (1.0, 2.0, 3, 1.0, 0.0, 3),
    (1.0, 2.0, 3, 0.0, 1.0, 3, -1.0),
])
def test_gridspec_validation(args):
    with pytest.raises(ValueError):
        GridSpec(*args)


def test_obj_roundtrip(tmp_path):
    m = build_mesh(S, GridSpec(0.2, 3.0, 80, 0.0, 2 * math.pi, 120), with_attrs=True)
    path = tmp_path / "s.obj"
    write_obj(m, path)
    verts, faces = read_obj(path)
    assert np.array_equal(verts, m.vertices)
    assert np.array_equal(faces, m.faces)
    assert "#a " in path.read_text()


def test_csv_first_row_and_header(tmp_path):
    m = build_mesh(S, GridSpec(1.0, 2.0, 3, 0.0, 1.0, 3), with_attrs=True)
    path = tmp_path / "s.csv"
    write_csv(m, path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["u", "v", "x", "y", "z", *ATTR_NAMES]
    first = [float(x) for x in rows[1]]
    assert first[:5] == pytest.approx([1.0, 0.0, 1.0, 1.0, 1.4789429], abs=1e-7)
    assert first[5 + ATTR_NAMES.index("K")] == pytest.approx(1.0)
    assert len(rows) == 10


def test_floats_roundtrip_exactly(tmp_path):
    m = build_mesh(S, GridSpec(0.3, 2.7, 7, 0.1, 6.0, 5))
    path = tmp_path / "s.csv"
    write_csv(m, path)
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert np.array_equal(data[:, 2:5], m.vertices)


def test_large_mesh_counts_and_speed(tmp_path):
    t0 = time.perf_counter()
    m = build_mesh(S, GridSpec(0.2, 3.0, 80, 0.0, 2 * math.pi, 120))
    write_obj(m, tmp_path / "big.obj")
    assert time.perf_counter() - t0 < 2.0
    assert len(m.vertices) == 9600 and len(m.faces) == 2 * 79 * 119
    assert np.all(np.isfinite(m.vertices))
