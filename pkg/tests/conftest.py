"""Shared fixtures: the six-UE reference cell and an in-process service client."""

import asyncio
from pathlib import Path

import httpx
import pytest

from rbfair import Logarithmic, Scenario, Sigmoidal
from rbfair.service.app import create_app

REPO_ROOT = Path(__file__).resolve().parent.parent
REFERENCE_SCENARIO_FILE = REPO_ROOT / "scenarios" / "reference_cell.scenario"


def reference_utilities():
    """Three real-time (sigmoidal) plus three FTP-style (logarithmic) users."""
    return [
        Sigmoidal(a=5, b=10),
        Sigmoidal(a=3, b=20),
        Sigmoidal(a=1, b=30),
        Logarithmic(k=15, r_max=100),
        Logarithmic(k=3, r_max=100),
        Logarithmic(k=0.5, r_max=100),
    ]


@pytest.fixture
def reference_scenario() -> Scenario:
    return Scenario.from_utilities(reference_utilities(), bandwidth=100.0)


REFERENCE_PAYLOAD_UES = [
    {"id": 1, "utility": "sigmoidal", "a": 5, "b": 10},
    {"id": 2, "utility": "sigmoidal", "a": 3, "b": 20},
    {"id": 3, "utility": "sigmoidal", "a": 1, "b": 30},
    {"id": 4, "utility": "logarithmic", "k": 15, "r_max": 100},
    {"id": 5, "utility": "logarithmic", "k": 3, "r_max": 100},
    {"id": 6, "utility": "logarithmic", "k": 0.5, "r_max": 100},
]


@pytest.fixture
def reference_payload() -> dict:
    return {"bandwidth": 100, "ues": [dict(ue) for ue in REFERENCE_PAYLOAD_UES]}


class ServiceClient:
    """Synchronous facade over the ASGI app, mirroring the CLI's transport."""

    def __init__(self, app):
        self._app = app

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        async def go():
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(transport=transport, base_url="http://testserver") as c:
                return await c.request(method, path, **kwargs)

        return asyncio.run(go())

    def get(self, path: str) -> httpx.Response:
        return self._request("GET", path)

    def post(self, path: str, json: dict) -> httpx.Response:
        return self._request("POST", path, json=json)


@pytest.fixture
def client() -> ServiceClient:
    return ServiceClient(create_app())
