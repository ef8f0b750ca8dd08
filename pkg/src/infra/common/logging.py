import functools
import time
from collections.abc import Callable
from typing import Any

from loguru import logger

from infra.enumerators.exit_code import exit_code_for


class LogCommand:
    """
    Decorator that logs each command invocation with its parameters, duration and exit code.
    """

    def __init__(
        self,
        name: str,
        *,
        params_limit: int = 1000,
        logger_instance=None,
        log_level: str = "INFO",
    ):
        self.name = name
        self.PARAMS_LIMIT = params_limit
        self.logger = logger_instance or logger
        self.log_level = log_level.upper()

    def __call__(self, func: Callable[..., int]) -> Callable[..., int]:
        @functools.wraps(func)
        def handler(*args: Any, **kwargs: Any) -> int:
            started = time.time()
            try:
                code = int(func(*args, **kwargs) or 0)
            except Exception as exc:
                self._log_exception(exc, started, kwargs)
                raise
            self._log_command(code, started, kwargs)
            return code

        return handler

    def _parameters(self, params: dict[str, Any]) -> dict[str, Any]:
        """
        Renders parameters as strings, truncated to the parameter limit.
        """
        return {key: str(value)[: self.PARAMS_LIMIT] for key, value in params.items()}

    def _log_exception(self, error: Exception, before_time: float, params: dict[str, Any]) -> None:
        duration = time.time() - before_time
        self.logger.warning(
            {
                "command": self.name,
                "exit_code": int(exit_code_for(error)),
                "duration": f"{duration:.3f}s",
                "parameters": self._parameters(params),
                "error": f"{type(error).__name__}: {error}"[: self.PARAMS_LIMIT],
            }
        )

    def _log_command(self, code: int, before_time: float, params: dict[str, Any]) -> None:
        """
        Logs the command details at the configured level, WARNING when the exit code is nonzero.
        """
        log_data = {
            "command": self.name,
            "exit_code": code,
            "duration": f"{time.time() - before_time:.3f}s",
            "parameters": self._parameters(params),
        }
        if code != 0:
            self.logger.warning(log_data)
        elif self.log_level == "INFO":
            self.logger.info(log_data)
        elif self.log_level == "DEBUG":
            self.logger.debug(log_data)
        else:
            self.logger.log(self.log_level, log_data)


def log_command(name: str, **kwargs: Any) -> LogCommand:
    """Shorthand for ``LogCommand(name, **kwargs)``."""
    return LogCommand(name, **kwargs)
