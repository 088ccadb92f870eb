from app_settings.utils import LogLevel, Environment, DifferentialMode
from app_settings.models import get_app_settings, AppSettings, DeciderSettings, LogSettings
__all__ = ["get_app_settings", "LogLevel", "Environment", "DifferentialMode",
           "AppSettings", "DeciderSettings", "LogSettings"]
