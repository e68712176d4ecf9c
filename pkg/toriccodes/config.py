import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import PreconditionError

ROOT_ENV = Path(__file__).resolve().parents[1] / ".env"
load_dotenv(dotenv_path=ROOT_ENV, override=True)

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class Settings(BaseModel):
    field_cap: int = Field(2 ** 16, gt=1, description="Largest admissible field order q")
    point_cap: int = Field(10 ** 7, gt=0, description="Cap on enumerated points and matrix cells")
    codeword_cap: int = Field(10 ** 7, gt=0, description="Cap on q^k - 1 enumerated codewords")
    workers: int = Field(1, ge=1, description="Threads for codeword enumeration and grid cells")
    seed: int = Field(20100312, ge=0, description="Default seed of sampling sweeps")
    sweep_samples: int = Field(1000, gt=0, description="Random polynomials per bound-sweep cell")
    log_level: str = Field("WARNING", description="Logging level of the command line")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}, got {value!r}")
        return level

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "field_cap": os.getenv("TORIC_FIELD_CAP"),
            "point_cap": os.getenv("TORIC_POINT_CAP"),
            "codeword_cap": os.getenv("TORIC_CODEWORD_CAP"),
            "workers": os.getenv("TORIC_WORKERS"),
            "seed": os.getenv("TORIC_SEED"),
            "sweep_samples": os.getenv("TORIC_SWEEP_SAMPLES"),
            "log_level": os.getenv("TORIC_LOG_LEVEL"),
        }
        return cls(**{key: value for key, value in values.items() if value is not None})


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        try:
            _settings = Settings.from_env()
        except ValidationError as e:
            raise PreconditionError("invalid TORIC_* settings", [err["msg"] for err in e.errors()])
    return _settings


def reset_settings(settings: Optional[Settings] = None) -> None:
    global _settings
    _settings = settings
