from .decider_logging import get_decider_logger, log_pipeline_step, configure_logging, logger
from .decider_log_context import DeciderLogContext
__all__ = ["get_decider_logger", "log_pipeline_step", "configure_logging", "logger",
           "DeciderLogContext"]
