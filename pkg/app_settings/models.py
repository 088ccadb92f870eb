from pathlib import Path
from functools import lru_cache
from pydantic import BaseModel, PrivateAttr, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .utils import LogLevel, Environment, DifferentialMode, generate_run_guid


class LogSettings(BaseModel):
    """Logging configuration settings.
    Attributes:
        run_guid (str): Unique identifier for the decider run.
        console_log_level (LogLevel): Log level for the stderr console sink.
        file_log_level (LogLevel): Log level for file output.
        log_directory (Path): Directory to store log files.
        file_log (bool): Whether to write rotating log files at all.
        json_log (bool): Whether to also write serialized JSON logs (needs file_log).
    """
    console_log_level: LogLevel = LogLevel.WARNING
    file_log_level: LogLevel = LogLevel.DEBUG
    log_directory: Path = Path("./logs")
    file_log: bool = False
    json_log: bool = True
    _run_guid: str = PrivateAttr(default_factory=generate_run_guid)

    @property
    def run_guid(self) -> str:
        return self._run_guid


class DeciderSettings(BaseModel):
    """Defaults for the decision pipeline.
    Attributes:
        differential_mode (DifferentialMode): Fibre differential of the mono model.
        max_degree (int | None): Degree cutoff; None means dim M + 1.
        output_version (str): Version written into verdict documents.
    """
    differential_mode: DifferentialMode = DifferentialMode.DUAL_CLASS
    max_degree: int | None = None
    output_version: str = "1"

    @field_validator("max_degree")
    @classmethod
    def positive_cutoff(cls, value: int | None) -> int | None:
        if value is not None and value < 1:
            raise ValueError("max_degree must be at least 1")
        return value


class AppSettings(BaseSettings):
    """Application settings for the immersion decider.
    Attributes:
        app_name (str): Name of the application.
        log (LogSettings): Logging configuration settings.
        decider (DeciderSettings): Decision pipeline defaults.
        environment (Environment): Application environment (development, testing, production).
    """
    app_name: str = "rational-immersion-decider"
    log: LogSettings = LogSettings()
    decider: DeciderSettings = DeciderSettings()
    environment: Environment = Environment.DEVELOPMENT

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_nested_delimiter="__"
    )


@lru_cache
def get_app_settings() -> AppSettings:
    """Get cached application settings instance.
    Returns:
        AppSettings: Application settings instance.
    """
    return AppSettings()


if __name__ == "__main__":
    from dotenv import dotenv_values

    print("---- Raw .env contents as python-dotenv sees them ----")
    print(dotenv_values(".env"))

    print("\n---- What AppSettings actually sees ----")
    settings = AppSettings()
    print(settings.model_dump())
