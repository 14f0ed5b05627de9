import os


def _env(name: str, default):
    value = os.getenv(f"SURDCF_{name}")
    if value is None:
        return default
    return type(default)(value)


# 실행 설정값. 환경변수 SURDCF_<이름> 으로 덮어쓸 수 있음
class Config:
    def __init__(self):
        self.MAX_STEPS = _env("MAX_STEPS", 10000)
        self.ROUNDTRIP_DIGITS = _env("ROUNDTRIP_DIGITS", 200)
        self.NUMERIC_DPS = _env("NUMERIC_DPS", 80)
        self.NUMERIC_TOLERANCE = _env("NUMERIC_TOLERANCE", "1e-40")
        self.NUMERIC_DIGITS = _env("NUMERIC_DIGITS", 200)
        self.WORKERS = _env("WORKERS", 1)
        self.RENDER_TRIAL_LIMIT = _env("RENDER_TRIAL_LIMIT", 1000)
        self.LOG_LEVEL = _env("LOG_LEVEL", "WARNING")


variables = Config()
