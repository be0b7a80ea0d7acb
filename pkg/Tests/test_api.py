"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
HTTP Surface Tests
"""

# Libraries
import pytest
from fastapi.testclient import TestClient

from Database.connector import database_instance
from main import app

PNG_HEADER = b"\x89PNG\r\n\x1a\n" + b"\x00\x00\x00\rIHDR" + b"\x00" * 64


@pytest.fixture
def client(tmp_path, monkeypatch):
    monkeypatch.setenv("HGS_UPLOAD_DIR", str(tmp_path / "uploads"))
    database_instance.configure("sqlite:///:memory:")
    with TestClient(app) as test_client:
        yield test_client


def test_catalog(client):
    response = client.get("/catalog")
    assert response.status_code == 200
    assert response.json()["message"] == "Catalog listed successfully"
    assert any(entry["label"] == "M10" for entry in response.json()["result"])


def test_info(client):
    response = client.get("/info", params={"group": "PGL(2,5)"})
    assert response.status_code == 200
    result = response.json()["result"]
    assert result["order"] == 120
    assert result["order_census"]["4"] == 30


def test_info_unknown_group(client):
    response = client.get("/info", params={"group": "X5"})
    assert response.status_code == 400
    assert response.json()["detail"]["type"] == "unknown group"


def test_count(client):
    response = client.post("/count", json={"group": "S5", "type": "AxCp(A5,2)"})
    assert response.status_code == 200
    result = response.json()["result"]
    assert result["value"] == 20
    assert result["method"] == "formula-thm1"


def test_count_errors(client):
    assert client.post("/count", json={"group": "S5", "type": "Foo"}).status_code == 400
    capped = client.post("/count", json={"group": "C9", "type": "C9", "method": "brute"})
    assert capped.status_code == 422
    assert capped.json()["detail"]["type"] == "cap exceeded"


def test_screen(client):
    response = client.post("/screen", json={"group": "S5", "type": "C120"})
    assert response.status_code == 200
    assert response.json()["result"]["excluded"] is True
    assert client.post("/screen", json={"group": "S5", "type": "A5"}).status_code == 400


def test_verify_refuses_stretch(client):
    assert client.get("/verify/stretch-720").status_code == 400
    assert client.get("/verify/everything").status_code == 400


def test_upload_text_group(client, tmp_path):
    files = {"file": ("S3.grp", b"perm 3\n(0 1 2)\n(0 1)\n", "text/plain")}
    response = client.post("/upload", files=files)
    assert response.status_code == 201

    result = response.json()["result"]
    assert result["order"] == 6
    assert result["spec"].startswith("file:")
    assert str(tmp_path / "uploads") in result["spec"]

    # 업로드한 군은 file: 표기로 다시 사용할 수 있음
    info = client.get("/info", params={"group": result["spec"]})
    assert info.json()["result"]["order"] == 6


def test_upload_rejects_binary(client):
    response = client.post("/upload", files={"file": ("image.grp", PNG_HEADER, "image/png")})
    assert response.status_code == 400
    assert response.json()["detail"]["input"]["file_type"] == "image/png"


def test_upload_rejects_bad_group(client):
    response = client.post("/upload", files={"file": ("bad.grp", b"perm 3\n(0 7)\n", "text/plain")})
    assert response.status_code == 400
    assert response.json()["detail"]["type"] == "parse error"


def test_upload_size_limit(client, monkeypatch):
    monkeypatch.setenv("HGS_MAX_UPLOAD_KB", "1")
    body = b"perm 3\n" + b"# padding\n" * 300
    response = client.post("/upload", files={"file": ("big.grp", body, "text/plain")})
    assert response.status_code == 413
    assert response.json()["detail"]["type"] == "too large"


def test_results_are_recorded(client, monkeypatch):
    monkeypatch.setenv("HGS_RECORD_RESULTS", "1")
    client.post("/count", json={"group": "S5", "type": "S5"})
    client.post("/count", json={"group": "V4", "type": "C4", "method": "byott"})

    rows = client.get("/results").json()["result"]
    assert [row["value"] for row in rows] == [3, 32]

    filtered = client.get("/results", params={"group": "S5"}).json()["result"]
    assert len(filtered) == 1
    assert filtered[0]["method"] == "formula-thm-old"
