# Copyright nestmc contributors: see top-level COPYRIGHT file for details
# SPDX-License-Identifier: (Apache-2.0 OR MIT)
"""Smoke tests for the Python bindings."""

import csv
import io
import math
import pathlib

import pytest

import nestmc

MODELS = pathlib.Path(__file__).resolve().parents[2] / "models"


def small_rect():
    return nestmc.generate("minicore-rect", assemblies=1, pins=3, slabs=2)


def test_generate_manifest():
    doc = nestmc.generate("minicore-rect")
    assert doc["root"] == "core"
    assert doc["manifest"]["params"]["assemblies"] == 3
    assert doc["manifest"]["params"]["pins"] == 5
    hexdoc = nestmc.generate("minicore-hex", rings=2)
    assert hexdoc["manifest"]["hexes"] == 7


def test_invalid_radii():
    with pytest.raises(nestmc.ConfigError, match="radii"):
        nestmc.generate("minicore-rect", radii=[0.5, 0.4])
    with pytest.raises(ValueError):
        nestmc.generate("minicore-rect", radii=[0.9])


def test_strategies_agree():
    doc = small_rect()
    runs = [
        nestmc.run(doc, strategy=s, histories=300, inactive=1, active=2)
        for s in nestmc.STRATEGIES
    ]
    for r in runs[1:]:
        assert r["k"] == runs[0]["k"]
        assert r["cell_flux"] == runs[0]["cell_flux"]
    acct = runs[0]["accounting"]
    assert acct["histories"] == 900
    assert acct["absorbed"] + acct["fission"] + acct["leaked"] == 900
    assert acct["lost"] == 0


def test_infinite_medium():
    doc = nestmc.generate("infinite-2g")
    expected = nestmc.infinite_medium_k(doc)
    assert math.isclose(expected, 1.2666666666666666, rel_tol=1e-12)
    r = nestmc.run(doc, histories=4000, inactive=5, active=20)
    assert abs(r["k_eff"] - expected) < 3 * r["k_std_err"]


def test_hex_gating():
    doc = nestmc.generate("minicore-hex", rings=1)
    with pytest.raises(nestmc.UnsupportedError, match="hexcore"):
        nestmc.Geometry(doc, "rtk")
    geo = nestmc.Geometry(doc, "st")
    assert geo.strategy == "st"
    assert geo.locate((0.0, 0.0, 1.0))[0][0] == "hexcore"
    r = nestmc.run(doc, histories=2000, inactive=1, active=2)
    assert len(r["k"]) == 3


def test_worked_pincell():
    path = MODELS / "pincell.json"
    geo = nestmc.Geometry(str(path), "sp")
    assert [u for u, _ in geo.locate((0.63, 0.63, 5.0))] == ["lattice", "pin"]
    assert geo.material((0.63, 0.63, 5.0)) == 0
    assert geo.material((0.02, 0.02, 5.0)) == 1
    assert "next: level" in geo.dump((0.63, 0.63, 5.0), (1.0, 0.0, 0.0))
    r = nestmc.run(str(path), histories=300, active=2)
    assert r["name"] == "pincell-2x2"
    assert r["mesh_dims"] == [2, 2, 1]


def test_outside_point():
    geo = nestmc.Geometry(small_rect(), "dp")
    with pytest.raises(nestmc.GeometryError):
        geo.locate((-5.0, 0.0, 0.0))


def test_verify_and_bench():
    results = nestmc.verify(["cross_surface", "replay"], scale=0.05,
                            replay_seeds=2)
    assert [s["name"] for s in results] == ["cross_surface", "replay"]
    assert all(s["passed"] for s in results)
    assert set(nestmc.suite_names()) >= {"bih", "arrays", "hex"}

    text, report = nestmc.bench(small_rect(), workloads=(100, 200),
                                inactive=1, active=1)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {(r["strategy"], r["n"]) for r in rows} == {
        (s, n) for s in nestmc.STRATEGIES for n in ("100", "200")
    }
    assert all(0.0 <= float(r["op_share"]) <= 1.0 for r in rows)
    assert len(report["rows"]) == 8
