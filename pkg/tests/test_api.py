import pytest
from fastapi.testclient import TestClient

from api import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_criterion(client):
    response = client.post("/criterion", json={"steps": "diagonal"})
    assert response.status_code == 200
    body = response.json()
    assert body["ok"] is True
    assert body["result"]["verdict"] == "GuaranteedDFinite"


def test_count(client):
    response = client.post("/count", json={"steps": "knight", "start": "1,1",
                                           "n_max": 4, "aggregate": True})
    cells = {(c["i"], c["j"]): c["count"]
             for c in response.json()["result"]["cells"]}
    assert cells[(2, 2)] == "2"
    assert cells[(0, 3)] == "1"


def test_domain_errors_name_the_field(client):
    response = client.post("/count", json={"steps": "(0,1);oops"})
    assert response.status_code == 400
    assert response.json()["field"] == "steps"
    response = client.post("/bijection", json={"steps": "square",
                                               "start": "0,1", "walk": "N"})
    assert response.status_code == 400
    assert response.json()["field"] == "walk"


def test_bijection(client):
    response = client.post("/bijection", json={"steps": "square",
                                               "walk": "N,N"})
    assert response.json()["result"]["image"] == ["S", "N"]
    response = client.post("/bijection", json={"steps": "square",
                                               "walk": "N,N,E,S"})
    result = response.json()["result"]
    assert result["target_level"] == -1
    assert result["flipped"] == [0]
    response = client.post("/bijection/cardinality",
                           json={"steps": "square", "n_max": 5})
    assert response.json()["ok"] is True


def test_series(client):
    response = client.get("/series/psi", params={"order": 6})
    assert response.status_code == 200
    assert response.json()["result"]["coeffs"][3] == ["-3", "8"]
    assert client.get("/series/zeta").status_code == 404


def test_verify(client):
    response = client.post("/verify", json={"identity": "diagonal",
                                            "order": 10})
    assert response.json()["ok"] is True
    assert response.json()["result"]["first_failure"] is None


def test_analytic(client):
    response = client.post("/analytic/branches", json={"x": "0.2+0.2j"})
    assert response.status_code == 200
    assert set(response.json()["result"]["values"]) == {"Xi0", "Xi1", "Xi2"}
    assert client.post("/analytic/nope", json={}).status_code == 404


def test_recur(client):
    response = client.post("/recur", json={"preset": "rec2",
                                           "box": "2:2,2:2"})
    assert response.json()["result"]["values"] == [
        {"n0": 2, "n1": 2, "value": "2"}
    ]
    response = client.post("/recur", json={
        "spec": '{"d": 1, "shifts": [{"h": [1]}], "start": [0]}'
    })
    assert response.status_code == 200
    assert response.json()["ok"] is False
    assert client.post("/recur", json={"spec": "spec.json"}).status_code == 400
