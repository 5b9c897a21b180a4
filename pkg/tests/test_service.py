"""HTTP surface of the service: endpoints, payload shapes, error mapping."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from qsurf.service.app import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_verify_endpoint_passes():
    response = client.post("/verify", json={"surface": "mobius", "grid": 9})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["surface"] == "mobius"
    names = [check["name"] for check in body["checks"]]
    assert "round_trip" in names and "seam_quadratic_decay" in names
    assert body["csv"].startswith("suite,check,cases,max_error,tolerance,pass")


def test_verify_endpoint_rejects_bad_geometry():
    response = client.post("/verify", json={"surface": "torus", "grid": 9, "R": 1.0, "r": 2.0})
    assert response.status_code == 400
    assert "R > r > 0" in response.json()["detail"]


def test_verify_endpoint_rejects_unknown_surface():
    response = client.post("/verify", json={"surface": "klein"})
    assert response.status_code == 422


@pytest.mark.parametrize(
    "payload, representative",
    [
        ({"surface": "mobius", "point": [-1.0, 0.0, 0.5]}, [1.0, 1.0]),
        ({"surface": "torus", "point": [4.0, 0.0, 0.0], "R": 3.0, "r": 1.0}, [0.0, 0.0]),
        ({"surface": "projective", "point": [0.0, 0.0, 0.0, 0.0]}, [1.0, 0.0, 0.0]),
    ],
)
def test_invert_endpoint_examples(payload, representative):
    response = client.post("/invert", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["representative"] == pytest.approx(representative, abs=1e-12)


def test_invert_endpoint_reports_not_on_surface():
    response = client.post("/invert", json={"surface": "mobius", "point": [0.0, 0.0, 1.0]})
    assert response.status_code == 422
    assert "not on surface" in response.json()["detail"]


def test_invert_endpoint_rejects_bad_arity():
    response = client.post("/invert", json={"surface": "mobius", "point": [1.0, 2.0]})
    assert response.status_code == 400
    assert "3 coordinates" in response.json()["detail"]


def test_invert_endpoint_rejects_non_finite_coordinates():
    response = client.post(
        "/invert", json={"surface": "torus", "point": ["inf", 0.0, 0.0]}
    )
    assert response.status_code in (400, 422)


def test_seam_endpoint():
    response = client.post("/seam", json={"surface": "torus", "decades": [2, 3, 4]})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert len(body["rows"]) == 3
    assert body["rows"][0]["ratio"] is None
    assert body["csv"].startswith("y,gap,ratio")


def test_seam_endpoint_rejects_bad_decades():
    response = client.post("/seam", json={"surface": "mobius", "decades": [1, 2]})
    assert response.status_code == 400


def test_export_endpoint_obj():
    response = client.post("/export", json={"surface": "torus", "grid": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["format"] == "obj"
    assert body["items"] == 16
    assert body["content"].startswith("v ")


def test_export_endpoint_csv4d():
    response = client.post("/export", json={"surface": "projective", "samples": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["format"] == "csv4d"
    assert body["content"].startswith("u,v,w,t\n")


def test_export_endpoint_rejects_format_mismatch():
    response = client.post("/export", json={"surface": "projective", "format": "obj"})
    assert response.status_code == 400
    response = client.post("/export", json={"surface": "mobius", "format": "csv4d"})
    assert response.status_code == 400
