"""Runtime settings"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="FRECHET_", extra="ignore")

    log_level: str = "WARNING"
    dump_cell_cap: int = 10_000_000  # largest n*m a dump may materialize
    brute_force_max_size: int = 24  # largest n+m the brute-force oracle accepts
    bench_workers: int = 1  # >1 runs bench trials in a process pool


settings = Settings()
