"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
version : 0.1.0
"""

# Libraries
from fastapi import FastAPI, UploadFile, File, HTTPException, status, Request
from fastapi.middleware.cors import CORSMiddleware
from contextlib import asynccontextmanager
from pydantic import BaseModel

import filetype
import hashlib

import Database
from Database.models import *

import os
from dotenv import load_dotenv

from Catalog.catalog import catalog_list, resolve_spec
from Catalog.group_files import load_group_text
from Catalog.verify_suites import run_verify_suite
from Engine.hgs_count import count_by_method
from Engine.structure_screen import classify_group, screen_candidate
from Utilities.config_tools import load_settings
from Utilities.error_tools import *
from Utilities.logging_tools import *

logger = get_logger("HGS_API")


# ========== 백그라운드 기능 ==========
@asynccontextmanager
async def startup(app: FastAPI):
    # 시작된 경우
    logger.info("🚀 Start Hopf-Galois Structure Counter!!!")

    yield

    # 종료 된 경우
    logger.info("🛑 Server shutdown")


app = FastAPI(lifespan=startup)

# ========== CORS 설정 ==========
origins_url = [
    "http://localhost:3000",
    "http://localhost:8080",
    "http://127.0.0.1:3000",
    "http://127.0.0.1:8080",
]

app.add_middleware(  # type: ignore
    CORSMiddleware,
    allow_origins=origins_url,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

load_dotenv()

checker_size: int = 2048


# ========== 요청 모델 ==========
class CountRequest(BaseModel):
    group: str
    type: str
    method: str = "formula"
    allow_12: bool = False
    checkpoint: str | None = None
    resume: str | None = None


class ScreenRequest(BaseModel):
    group: str
    type: str


# 계산 오류를 HTTP 오류로 바꾸는 기능
def _http_error(error: HGSError) -> HTTPException:
    if error.http_status >= 500:
        logger.error(f"Engine invariant failed: {error.message}")
    else:
        logger.warning(f"Rejected request: {error.message}")
    return HTTPException(status_code=error.http_status, detail=error.detail)


def _group_info(group) -> dict:
    return {
        "label": group.name,
        "order": group.order,
        "structure": classify_group(group).describe(),
        "order_census": group.order_statistics(),
    }


# ========== 군 목록 및 정보 ==========
@app.get("/catalog", status_code=status.HTTP_200_OK)
def get_catalog():
    return {
        "message": "Catalog listed successfully",
        "result": catalog_list()
    }


@app.get("/info", status_code=status.HTTP_200_OK)
def get_info(group: str):
    try:
        result = _group_info(resolve_spec(group))
    except HGSError as error:
        raise _http_error(error)

    return {
        "message": "Group resolved successfully",
        "result": result
    }


# ========== 계산 기능 ==========
@app.post("/count", status_code=status.HTTP_200_OK)
def count_structures(count_data: CountRequest):
    try:
        G = resolve_spec(count_data.group)
        N = resolve_spec(count_data.type)
        allow_12 = count_data.allow_12 or load_settings().brute_allow_12
        result = count_by_method(G, N, count_data.method, checkpoint=count_data.checkpoint,
                                 resume=count_data.resume, allow_12=allow_12)
    except HGSError as error:
        raise _http_error(error)

    if load_settings().record_results:
        Database.save_count_result(result)

    logger.info(f"e({result.g_label}, {result.n_label}) = {result.value} by {result.method.value}")
    return {
        "message": "Count computed successfully",
        "result": result.model_dump(mode="json")
    }


@app.post("/screen", status_code=status.HTTP_200_OK)
def screen_structure(screen_data: ScreenRequest):
    try:
        report = screen_candidate(resolve_spec(screen_data.group), resolve_spec(screen_data.type))
    except HGSError as error:
        raise _http_error(error)

    return {
        "message": "Candidate screened successfully",
        "result": report.model_dump(mode="json")
    }


@app.get("/verify/{suite}", status_code=status.HTTP_200_OK)
def verify_suite(suite: str):
    try:
        report = run_verify_suite(suite)
    except HGSError as error:
        raise _http_error(error)

    if load_settings().record_results:
        Database.save_verify_run(report)

    return {
        "message": "Suite passed" if report.ok else "Suite failed",
        "result": report.model_dump(mode="json")
    }


# ========== 군 파일 업로드 ==========
@app.post("/upload", status_code=status.HTTP_201_CREATED)
async def upload_group(request: Request, file: UploadFile = File(...)):
    settings = load_settings()
    max_upload_size = settings.max_upload_kb * 1024

    # 파일 크기 검사
    content_length = request.headers.get("Content-Length")
    if content_length is not None and int(content_length) > max_upload_size:
        raise HTTPException(
            status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
            detail={
                "type": "too large",
                "message": f"Group file size exceeds the limit({settings.max_upload_kb}KB max).",
                "input": {
                    "file_name": file.filename,
                    "file_size": f"{int(content_length) // 1024}KB",
                }
            }
        )

    content = await file.read()
    if len(content) > max_upload_size:
        raise HTTPException(
            status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
            detail={
                "type": "too large",
                "message": f"Group file size exceeds the limit({settings.max_upload_kb}KB max).",
                "input": {
                    "file_name": file.filename,
                    "file_size": f"{len(content) // 1024}KB",
                }
            }
        )

    # 파일 내용 검사 (군 파일은 텍스트만 허용)
    file_type = filetype.guess(content[:checker_size])
    if file_type is not None:
        logger.warning(f"Binary group file rejected: {file_type.mime}")
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={
                "type": "invalid value",
                "message": "Only text group files can be uploaded",
                "input": {
                    "file_name": file.filename,
                    "file_type": file_type.mime
                }
            }
        )

    try:
        text = content.decode("utf-8")
    except UnicodeDecodeError:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={
                "type": "invalid value",
                "message": "Group files must be UTF-8 text",
                "input": {
                    "file_name": file.filename
                }
            }
        )

    filename, _ = os.path.splitext(os.path.basename(file.filename or "group"))
    try:
        group = load_group_text(text, name=filename)
    except HGSError as error:
        raise _http_error(error)

    # 내용 해시로 저장하여 이후 요청에서 file: 표기로 사용
    os.makedirs(settings.upload_dir, exist_ok=True)
    digest = hashlib.sha256(content).hexdigest()[:16]
    file_path = os.path.join(settings.upload_dir, f"{filename}_{digest}.grp")
    with open(file_path, "wb") as _buffer:
        _buffer.write(content)

    logger.info(f"Group file uploaded: {file_path}")
    return {
        "message": "Group file uploaded successfully",
        "result": {
            "file_name": file.filename,
            "spec": f"file:{file_path}",
            **_group_info(group)
        }
    }


# ========== 계산 기록 ==========
@app.get("/results", status_code=status.HTTP_200_OK)
def get_results(group: str | None = None, type: str | None = None, order: Order = Order.DESC):
    return {
        "message": "Results listed successfully",
        "result": Database.get_all_count_results(g_label=group, n_label=type, order=order)
    }
