"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Worker Pool Tools
"""

# Libraries
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

from Utilities.logging_tools import *

logger = get_logger("HGS_Pool")


# 작업 목록을 worker 들에게 나누고, 입력 순서대로 결과를 모으는 기능
def run_partitioned(task: Callable[[Any], Any], chunks: Sequence[Any], jobs: int,
                    initializer: Callable | None = None, initargs: tuple = ()) -> list:
    """
    chunk 단위 작업을 병렬로 수행하고 입력 순서를 유지한 결과 list 를 반환하는 기능
    :param task: module 수준 함수 (pickle 가능해야 함)
    :param chunks: 작업 단위 목록
    :param jobs: worker 수 (1 이하이면 현재 process 에서 수행)
    :param initializer: worker 마다 한 번 호출되는 공유 상태 설정 함수
    :param initargs: initializer 인자
    :return: chunks 와 같은 순서의 결과 list
    """
    if jobs <= 1 or len(chunks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [task(chunk) for chunk in chunks]

    workers = min(jobs, len(chunks))
    logger.info(f"Dispatching {len(chunks)} chunks to {workers} workers")

    with ProcessPoolExecutor(max_workers=workers, initializer=initializer, initargs=initargs) as executor:
        return list(executor.map(task, chunks))


# 순서를 유지하며 목록을 거의 같은 크기의 조각으로 나누기
def split_evenly(items: Sequence[Any], parts: int) -> list[Sequence[Any]]:
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    result: list = []
    start = 0
    for index in range(parts):
        end = start + size + (1 if index < extra else 0)
        result.append(items[start:end])
        start = end
    return [chunk for chunk in result if len(chunk) > 0]
