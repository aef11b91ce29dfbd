import pytest
from fastapi.testclient import TestClient

from convexalg.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_instances_listing(client):
    names = client.get("/instances").json()["instances"]
    assert names == sorted(names)
    for expected in ("rat", "vec2", "fdist3", "dompair", "scaled-rat", "broken-demo"):
        assert expected in names


def test_functions_listing(client):
    fns = client.get("/functions").json()["functions"]
    assert "log_ext" in fns and "square" in fns


class TestLaws:
    def test_lawful_instance_passes(self, client):
        r = client.post("/laws", json={"instance": "rat", "seed": 1, "cases": 25})
        assert r.status_code == 200
        body = r.json()
        assert body["ok"] is True
        assert body["instance"] == "rat"
        assert body["cases"] == 25
        assert len(body["laws"]) == 33
        assert all(entry["pass"] for entry in body["laws"])

    def test_mutant_is_flagged(self, client):
        r = client.post("/laws", json={"instance": "broken-demo", "cases": 40})
        assert r.status_code == 200
        body = r.json()
        assert body["ok"] is False
        failed = [e for e in body["laws"] if not e["pass"]]
        assert failed
        ce = failed[0]["counterexample"]
        assert ce is not None and "case" in ce

    def test_unknown_instance_is_400(self, client):
        r = client.post("/laws", json={"instance": "octonions", "cases": 5})
        assert r.status_code == 400
        body = r.json()
        assert body["error"] == "UnknownInstanceError"
        assert "octonions" in body["detail"]

    def test_case_bounds_are_validated(self, client):
        r = client.post("/laws", json={"instance": "rat", "cases": 0})
        assert r.status_code == 422

    def test_identical_requests_identical_bodies(self, client):
        payload = {"instance": "broken-demo", "seed": 7, "cases": 30}
        first = client.post("/laws", json=payload)
        second = client.post("/laws", json=payload)
        assert first.content == second.content


class TestBarycenter:
    def test_plane_example(self, client):
        r = client.post("/barycenter", json={
            "instance": "vec2",
            "weights": ["1/2", "1/4", "1/4"],
            "points": [["0", "0"], ["1", "0"], ["0", "1"]],
        })
        assert r.status_code == 200
        assert r.json()["point"] == {"coords": ["1/4", "1/4"]}

    def test_scalar_point_mass(self, client):
        r = client.post("/barycenter", json={
            "instance": "rat", "weights": ["1"], "points": ["7/3"],
        })
        assert r.json()["point"] == "7/3"

    def test_weights_must_sum_to_one(self, client):
        r = client.post("/barycenter", json={
            "instance": "rat", "weights": ["1/2", "1/4"], "points": ["0", "1"],
        })
        assert r.status_code == 422
        assert r.json()["error"] == "InvalidDistributionError"


class TestHullSplit:
    def test_two_point_example(self, client):
        r = client.post("/hull-split", json={
            "instance": "rat",
            "witness": {"weights": ["1/2", "1/2"], "generators": ["0", "1"]},
            "x_indices": [0],
            "default_x": "0",
            "default_y": "1",
        })
        assert r.status_code == 200
        body = r.json()
        assert body["p"] == "1/2"
        assert body["point"] == "1/2"
        assert body["reconstructed"] is True
        assert body["x"]["generators"] == ["0"]
        assert body["y"]["generators"] == ["1"]

    def test_all_x_uses_default_y(self, client):
        r = client.post("/hull-split", json={
            "instance": "rat",
            "witness": {"weights": ["1/3", "2/3"], "generators": ["1", "4"]},
            "x_indices": [0, 1],
            "default_x": "0",
            "default_y": "99",
        })
        body = r.json()
        assert body["p"] == "1"
        assert body["y"]["generators"] == ["99"]
        assert body["reconstructed"] is True

    def test_index_out_of_range(self, client):
        r = client.post("/hull-split", json={
            "instance": "rat",
            "witness": {"weights": ["1"], "generators": ["0"]},
            "x_indices": [3],
            "default_x": "0",
            "default_y": "1",
        })
        assert r.status_code == 422
        assert r.json()["error"] == "ParseError"


class TestDivergence:
    def test_one_bit(self, client):
        r = client.post("/divergence", json={
            "P": {"weights": ["1", "0"]},
            "Q": {"weights": ["1/2", "1/2"]},
        })
        assert r.status_code == 200
        body = r.json()
        assert body["divergence"] == "1"
        assert body["dominated"] is True

    def test_not_dominated_is_422(self, client):
        r = client.post("/divergence", json={
            "P": {"weights": ["1/2", "1/2"]},
            "Q": {"weights": ["1", "0"]},
        })
        assert r.status_code == 422
        assert r.json()["error"] == "NotDominatedError"


class TestConvexCheck:
    def test_square_is_convex(self, client):
        r = client.post("/convex-check", json={
            "fn": "square", "mode": "convex", "lo": -10.0, "hi": 10.0,
            "cases": 300, "seed": 2,
        })
        assert r.status_code == 200
        body = r.json()
        assert body["ok"] is True
        assert body["laws"][0]["law"] == "analysis/convex/square"

    def test_grid_adds_second_law(self, client):
        r = client.post("/convex-check", json={
            "fn": "log_ext", "mode": "concave", "lo": 1.0, "hi": 100.0,
            "cases": 300, "seed": 2, "grid_points": 50,
        })
        body = r.json()
        assert body["ok"] is True
        assert [e["law"] for e in body["laws"]] == [
            "analysis/concave/log_ext",
            "analysis/second-derivative/concave/log_ext",
        ]

    def test_unknown_function_is_400(self, client):
        r = client.post("/convex-check", json={
            "fn": "tanh", "lo": 0.0, "hi": 1.0, "cases": 10,
        })
        assert r.status_code == 400
        assert r.json()["error"] == "UnknownFunctionError"

    def test_mode_is_validated_by_schema(self, client):
        r = client.post("/convex-check", json={
            "fn": "square", "mode": "wiggly", "lo": 0.0, "hi": 1.0,
        })
        assert r.status_code == 422
