import sys
from typing import Iterable, Optional

from pydantic import BaseModel


def emit(response: BaseModel, lines: Iterable[str], as_json: bool = False, out: Optional[str] = None,
         exclude: Optional[set] = None) -> None:
    """리포트를 stdout 또는 --out 파일로 출력 (JSON 또는 텍스트)"""
    if as_json:
        text = response.model_dump_json(indent=2, exclude=exclude) + "\n"
    else:
        text = "".join(f"{line}\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8") as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def flag(value: Optional[bool]) -> str:
    return "true" if value else "false"


# 공통 출력 옵션
JSON_ARG = (("--json",), {"action": "store_true", "help": "machine-readable JSON output"})
OUT_ARG = (("--out",), {"metavar": "FILE", "help": "write the report to FILE instead of standard output"})
