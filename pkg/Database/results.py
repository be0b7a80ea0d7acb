"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Database Results Part
"""

# Library
from Database.connector import database_instance as database
from Database.models import *

from sqlalchemy import and_
from sqlalchemy.exc import SQLAlchemyError

from Utilities.logging_tools import *

logger = get_logger("DB_Results")


# 계산 결과 저장 기능
def save_count_result(result) -> bool:
    """
    하나의 CountResult 를 기록하는 기능
    :param result: CountResult
    :return: 성공 여부 bool
    """
    database_pre_session = database.get_pre_session()
    with database_pre_session() as session:
        try:
            new_result = CountResultsTable(
                g_label=result.g_label,
                n_label=result.n_label,
                method=result.method.value,
                value=result.value,
                runtime_ms=result.runtime_ms,
                checkpoint_id=result.checkpoint_id,
                conditional=result.conditional
            )

            session.add(new_result)
            session.commit()
            return True
        except SQLAlchemyError as error:
            session.rollback()
            logger.error(f"Error saving count result: {str(error)}")
            return False


# 조건에 따른 계산 결과 불러오기 기능
def get_all_count_results(g_label: str = None, n_label: str = None, order: Order = Order.DESC) -> list[dict]:
    """
    조건에 따른 모든 계산 결과를 불러오는 기능
    :param g_label: Galois 군 이름 str (Nullable)
    :param n_label: 유형 군 이름 str (Nullable)
    :param order: 기록 순서 정렬 방향
    :return: 결과 단위로 묶은 데이터 list[dict]
    """
    result: list[dict] = []

    database_pre_session = database.get_pre_session()
    with database_pre_session() as session:
        try:
            conditions = []
            if g_label:
                conditions.append(CountResultsTable.g_label == g_label)
            if n_label:
                conditions.append(CountResultsTable.n_label == n_label)

            # 주어진 조건에 따라 Query 설정
            query = session.query(
                CountResultsTable.id,
                CountResultsTable.g_label,
                CountResultsTable.n_label,
                CountResultsTable.method,
                CountResultsTable.value,
                CountResultsTable.runtime_ms,
                CountResultsTable.checkpoint_id,
                CountResultsTable.conditional,
                CountResultsTable.created_at
            )
            if conditions:
                query = query.filter(and_(*conditions))
            ordering = CountResultsTable.id.desc() if order == Order.DESC else CountResultsTable.id.asc()
            result_list = query.order_by(ordering).all()

            serialized_data: list[dict] = []
            for row in result_list:
                serialized_data.append({
                    "id": row[0],
                    "g_label": row[1],
                    "n_label": row[2],
                    "method": row[3],
                    "value": row[4],
                    "runtime_ms": row[5],
                    "checkpoint_id": row[6],
                    "conditional": row[7],
                    "created_at": row[8]
                })
            result = serialized_data
        except SQLAlchemyError as error:
            session.rollback()
            logger.error(f"Error getting count results: {str(error)}")
            result = []
        finally:
            return result


# 검증 묶음 실행 기록 기능
def save_verify_run(report) -> bool:
    """
    VerifyReport 의 통과/실패 수를 기록하는 기능
    :param report: VerifyReport
    :return: 성공 여부 bool
    """
    database_pre_session = database.get_pre_session()
    with database_pre_session() as session:
        try:
            new_run = VerifyRunsTable(
                suite=report.suite,
                passed=report.passed,
                failed=report.failed
            )

            session.add(new_run)
            session.commit()
            return True
        except SQLAlchemyError as error:
            session.rollback()
            logger.error(f"Error saving verify run: {str(error)}")
            return False
