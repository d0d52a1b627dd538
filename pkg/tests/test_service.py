"""HTTP surface: wire formats, status codes, and float fidelity."""

import pytest

from conftest import reference_utilities
from rbfair import Scenario, allocate
from rbfair.service.schemas import ScenarioSpec


@pytest.fixture
def pair_payload():
    return {
        "bandwidth": 15,
        "ues": [
            {"id": 1, "utility": "sigmoidal", "a": 5, "b": 10},
            {"id": 2, "utility": "logarithmic", "k": 15, "r_max": 100},
        ],
    }


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestAllocateEndpoint:
    def test_reference_cell_round_trips_floats_exactly(self, client, reference_payload):
        resp = client.post("/allocate", json={"scenario": reference_payload})
        assert resp.status_code == 200
        data = resp.json()
        core = allocate(Scenario.from_utilities(reference_utilities(), 100.0))
        assert tuple(data["continuous"]["rates"]) == core.continuous.rates
        assert tuple(data["continuous"]["bids"]) == core.continuous.bids
        assert data["continuous"]["price"] == core.continuous.price
        assert data["continuous"]["converged"] is True
        assert len(data["candidates"]) == len(core.feasible_pool)

    def test_pool_max_filters_to_maximizers(self, client, reference_payload):
        resp = client.post("/allocate", json={"scenario": reference_payload, "pool": "max"})
        data = resp.json()
        assert len(data["candidates"]) == 1
        assert data["candidates"][0]["maximizer"] is True
        assert data["candidates"][0]["rbs"] == [11, 22, 34, 8, 10, 15]

    def test_bandwidth_override(self, client, reference_payload):
        resp = client.post("/allocate", json={"scenario": reference_payload, "bandwidth": 90})
        assert resp.status_code == 200
        assert resp.json()["bandwidth"] == 90.0

    def test_trace_on_request(self, client, reference_payload):
        resp = client.post(
            "/allocate", json={"scenario": reference_payload, "include_trace": True}
        )
        trace = resp.json()["continuous"]["trace"]
        assert trace[0]["n"] == 1
        assert trace[0]["bids"] == [1.0] * 6
        resp = client.post("/allocate", json={"scenario": reference_payload})
        assert resp.json()["continuous"]["trace"] is None

    def test_shape_errors_are_422(self, client, reference_payload):
        bad = dict(reference_payload)
        bad["ues"] = [dict(bad["ues"][0], a=-1)] + bad["ues"][1:]
        assert client.post("/allocate", json={"scenario": bad}).status_code == 422
        # missing family parameter
        bad["ues"] = [{"id": 1, "utility": "sigmoidal", "a": 5}] + reference_payload["ues"][1:]
        assert client.post("/allocate", json={"scenario": bad}).status_code == 422
        # unknown field
        bad["ues"] = [dict(reference_payload["ues"][0], slope=3)] + reference_payload["ues"][1:]
        assert client.post("/allocate", json={"scenario": bad}).status_code == 422

    def test_domain_errors_are_400(self, client, reference_payload):
        resp = client.post(
            "/allocate", json={"scenario": reference_payload, "bandwidth": 4}
        )
        assert resp.status_code == 400
        assert "below the UE count" in resp.json()["detail"]

    def test_exhausted_bandwidth_is_409(self, client):
        scenario = {
            "bandwidth": 3,
            "ues": [
                {"id": 1, "utility": "sigmoidal", "a": 5, "b": 3},
                {"id": 2, "utility": "logarithmic", "k": 0.05, "r_max": 100},
                {"id": 3, "utility": "logarithmic", "k": 0.05, "r_max": 100},
            ],
        }
        resp = client.post("/allocate", json={"scenario": scenario})
        assert resp.status_code == 409
        assert "exceeds bandwidth" in resp.json()["detail"]


class TestSweepEndpoint:
    def test_rows(self, client, reference_payload):
        resp = client.post(
            "/sweep",
            json={"scenario": reference_payload, "start": 98, "stop": 100, "step": 1},
        )
        assert resp.status_code == 200
        rows = resp.json()["rows"]
        assert [r["bandwidth"] for r in rows] == [98.0, 99.0, 100.0]
        assert all(r["error"] is None for r in rows)
        assert all(min(r["rbs"]) >= 1 for r in rows)

    def test_start_below_ue_count_is_400(self, client, reference_payload):
        resp = client.post(
            "/sweep", json={"scenario": reference_payload, "start": 5, "stop": 10}
        )
        assert resp.status_code == 400


class TestComplexityEndpoint:
    def test_exact_big_integers_as_strings(self, client):
        resp = client.post(
            "/complexity", json={"ues_start": 100, "ues_stop": 100, "candidates_per_ue": 10}
        )
        row = resp.json()["rows"][0]
        assert row["full"] == str(10**100)
        assert row["boundary"] == str(2**100)
        assert row["log10_full"] == 100.0

    def test_reversed_range_is_400(self, client):
        resp = client.post(
            "/complexity", json={"ues_start": 10, "ues_stop": 5, "candidates_per_ue": 10}
        )
        assert resp.status_code == 400


class TestOracleEndpoint:
    def test_pair_fixture(self, client, pair_payload):
        resp = client.post("/oracle", json={"scenario": pair_payload, "grid_bound": 15})
        assert resp.status_code == 200
        data = resp.json()
        assert data["best"]["rbs"] == [11, 4]
        assert data["evaluated_count"] == 225

    def test_guard_is_400(self, client, reference_payload):
        resp = client.post("/oracle", json={"scenario": reference_payload, "grid_bound": 10})
        assert resp.status_code == 400  # six UEs exceed the brute-force guard


class TestScenarioSpec:
    def test_round_trip_through_the_wire_model(self, reference_scenario):
        spec = ScenarioSpec.from_scenario(reference_scenario)
        again = spec.to_scenario()
        assert again == reference_scenario
