from __future__ import annotations

from pathlib import Path

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv(Path(__file__).parent.parent.parent.parent / "config" / ".env")


class HessCohSettings(BaseSettings):
    # Worker threads for fixed-point and Hessenberg-function fan-out
    threads: int = 1

    # Logging (stderr); the CLI keeps stdout for results only
    logging_level: str = "WARNING"

    # Largest Weyl group the enumerator will build
    weyl_budget: int = 2000

    # Extra polynomial degrees swept past the largest generator degree when
    # comparing two ideals
    degree_margin: int = 2

    # Cohomological degrees looked at past the expected top degree when
    # certifying finite dimensionality
    regularity_extra_degrees: int = 2

    # verify-all refuses larger n unless --allow-large is given
    verify_all_max_n: int = 6

    schema_version: str = "1"

    model_config = SettingsConfigDict(
        env_prefix="HESSCOH_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )


SETTINGS = HessCohSettings()
