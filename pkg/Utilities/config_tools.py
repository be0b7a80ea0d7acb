"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Configuration Tools
"""

# Libraries
from dataclasses import dataclass

import os
from dotenv import load_dotenv


@dataclass(frozen=True)
class Settings:
    max_table: int
    max_closure: int
    max_perm_degree: int
    jobs: int
    brute_cap: int
    brute_allow_12: bool
    checkpoint_every: int
    allow_stretch: bool
    record_results: bool
    max_upload_kb: int
    upload_dir: str
    database_url: str


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


def _database_url() -> str:
    # 직접 지정한 URL이 우선, 그 다음 MySQL 접속 정보, 없으면 로컬 SQLite
    url = os.getenv("HGS_DATABASE_URL")
    if url:
        return url

    host = os.getenv("HGS_DB_HOST")
    if host:
        port = int(os.getenv("HGS_DB_PORT", 3306))
        user = os.getenv("HGS_DB_USER", "")
        password = os.getenv("HGS_DB_PASSWORD", "")
        schema = os.getenv("HGS_DB_SCHEMA", "hgs")
        charset = os.getenv("HGS_DB_CHARSET", "utf8")
        return (f"mysql+pymysql://{user}:" +
                f"{password}@{host}:{port}/" +
                f"{schema}?charset={charset}")

    return "sqlite:///hgs_results.db"


# 환경 변수로부터 설정 불러오기 (호출할 때마다 새로 읽음)
def load_settings() -> Settings:
    """
    .env 파일과 환경 변수에서 계산 엔진 설정을 읽어오는 기능
    :return: 현재 설정 Settings
    """
    load_dotenv()

    return Settings(
        max_table=int(os.getenv("HGS_MAX_TABLE", 2000)),
        max_closure=int(os.getenv("HGS_MAX_CLOSURE", 1000000)),
        max_perm_degree=int(os.getenv("HGS_MAX_PERM_DEGREE", 64)),
        jobs=max(1, int(os.getenv("HGS_JOBS", 1))),
        brute_cap=int(os.getenv("HGS_BRUTE_CAP", 8)),
        brute_allow_12=_flag("HGS_BRUTE_ALLOW_12"),
        checkpoint_every=max(1, int(os.getenv("HGS_CHECKPOINT_EVERY", 50))),
        allow_stretch=_flag("HGS_ALLOW_STRETCH"),
        record_results=_flag("HGS_RECORD_RESULTS"),
        max_upload_kb=int(os.getenv("HGS_MAX_UPLOAD_KB", 256)),
        upload_dir=os.getenv("HGS_UPLOAD_DIR", "Uploads"),
        database_url=_database_url(),
    )
