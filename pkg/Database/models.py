"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Database Table Models
"""

# Library
from sqlalchemy import Column, TIMESTAMP, INT, FLOAT, BIGINT, String, Boolean, func
from sqlalchemy.orm import declarative_base

from enum import Enum as BaseEnum

# Create table base
Base = declarative_base()


# Enum
class Order(BaseEnum):
    ASC = "asc"
    DESC = "desc"


# ========== DB Tables ==========

class CountResultsTable(Base):
    """
    e(G, N) 계산 결과 기록
    """
    __tablename__ = "countresults"

    id = Column(INT, primary_key=True, autoincrement=True)
    g_label = Column(String(64), nullable=False, index=True)
    n_label = Column(String(64), nullable=False, index=True)
    method = Column(String(32), nullable=False)
    value = Column(BIGINT, nullable=False)
    runtime_ms = Column(FLOAT, nullable=False)
    checkpoint_id = Column(String(128), nullable=True)
    conditional = Column(Boolean, nullable=False, default=False)
    created_at = Column(TIMESTAMP, nullable=False, server_default=func.now())

    def __repr__(self):
        return (f"" +
                f"<CountResult(id='{self.id}', " +
                f"g_label='{self.g_label}', " +
                f"n_label='{self.n_label}', " +
                f"method='{self.method}', " +
                f"value='{self.value}', " +
                f"conditional='{self.conditional}')>"
                )


class VerifyRunsTable(Base):
    """
    검증 묶음 실행 기록
    """
    __tablename__ = "verifyruns"

    id = Column(INT, primary_key=True, autoincrement=True)
    suite = Column(String(32), nullable=False)
    passed = Column(INT, nullable=False)
    failed = Column(INT, nullable=False)
    created_at = Column(TIMESTAMP, nullable=False, server_default=func.now())

    def __repr__(self):
        return (f"" +
                f"<VerifyRun(id='{self.id}', " +
                f"suite='{self.suite}', " +
                f"passed='{self.passed}', " +
                f"failed='{self.failed}')>"
                )
