"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Logging Tools
"""

# Libraries
import logging
import os

from dotenv import load_dotenv

load_dotenv()

logging.basicConfig(
    level=os.getenv("HGS_LOG_LEVEL", "INFO").upper(),
    format="%(levelname)s: \t  [%(name)s] %(message)s",
)


# 각 파일별 logger 반환 기능
def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
