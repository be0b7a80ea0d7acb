"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Database Connector
"""

# Library
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

from Database.models import Base
from Utilities.config_tools import load_settings
from Utilities.logging_tools import *

logger = get_logger("DB_Connector")


class Database:
    def __init__(self, url: str | None = None):
        self.configure(url)

    def configure(self, url: str | None = None) -> None:
        """
        결과 기록용 DB 연결을 (다시) 만드는 기능
        :param url: SQLAlchemy URL (기본값: 설정의 database_url)
        """
        self.url = url or load_settings().database_url

        if self.url.startswith("sqlite"):
            # SQLite 는 파일 하나, 메모리 DB 는 연결 하나를 공유
            options: dict = {"connect_args": {"check_same_thread": False}}
            if ":memory:" in self.url or self.url == "sqlite://":
                options["poolclass"] = StaticPool
        else:
            # Connection Pool 방식 SQL 연결 생성
            options = {
                "pool_size": 10,
                "max_overflow": 5,
                "pool_recycle": 120,
                "pool_pre_ping": True,
            }

        self.engine = create_engine(self.url, echo=False, **options)
        Base.metadata.create_all(self.engine)

        # ORM Session 설정
        self.pre_session = sessionmaker(
            autocommit=False,
            autoflush=False,
            bind=self.engine
        )
        logger.debug(f"Result ledger bound to {self.engine.url.render_as_string(hide_password=True)}")

    # DB 연결을 위한 Pre Session을 반환하는 기능
    def get_pre_session(self):
        return self.pre_session


database_instance = Database()
