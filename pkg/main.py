# surdcf: 주기 연분수와 이차 무리수의 정확한 계산
#
# 커맨드는 routers/ 아래 라우터 단위로 나뉘어 있고 여기서 한 번에 등록함.
# 종료 코드: 0 성공, 1 내부 오류, 2 파싱 오류, 3 잘못된 입력, 4 주기 초과, 5 성질 위반, 70 내부 계약 위반

import logging
import sys
from typing import List, Optional

from routers import (
    App,
    enumeration_router,
    epsilon_router,
    evaluation_router,
    expansion_router,
    roundtrip_router,
    schema_router,
)
from utils.config import variables
from utils.logger import setup_logging

# CLI 애플리케이션 생성
app = App(
    prog="surdcf",
    description="Exact arithmetic on periodic continued fractions and quadratic irrationals.",
)

app.include_router(evaluation_router)
app.include_router(expansion_router)
app.include_router(epsilon_router)
app.include_router(enumeration_router)
app.include_router(roundtrip_router)
app.include_router(schema_router)


def main(argv: Optional[List[str]] = None) -> int:
    args = app.parser.parse_args(argv)
    if args.verbose:
        setup_logging(logging.DEBUG if args.verbose > 1 else logging.INFO)
    else:
        setup_logging(variables.LOG_LEVEL)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
