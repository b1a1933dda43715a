"""
Logging setup for the solver and the CLI.

Logs always go to stderr; stdout is reserved for command payloads.
"""

import logging
import sys
from typing import Any


def _level(name: str) -> int:
    """Numeric level for ``name``; unknown names mean WARNING."""
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else logging.WARNING


try:
    import structlog
    from structlog.stdlib import LoggerFactory

    def setup_logging(config: Any) -> None:
        """Route structlog through stdlib logging on stderr."""
        logging.basicConfig(format="%(message)s", stream=sys.stderr, level=_level(config.level), force=True)

        renderer: Any
        if config.format == "json":
            renderer = structlog.processors.JSONRenderer(sort_keys=True)
        else:
            renderer = structlog.dev.ConsoleRenderer(colors=config.enable_colors)

        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.StackInfoRenderer(),
                structlog.processors.TimeStamper(fmt="ISO", utc=True),
                renderer,
            ],
            logger_factory=LoggerFactory(),
            cache_logger_on_first_use=True,
        )

    def bind_command(command: str | None, **context: Any) -> None:
        """Tag every following log line with the running subcommand."""
        structlog.contextvars.clear_contextvars()
        if command:
            structlog.contextvars.bind_contextvars(command=command, **context)

    def get_logger(name: str | None = None) -> Any:
        return structlog.get_logger(name)

except ImportError:

    def setup_logging(config: Any) -> None:
        logging.basicConfig(
            stream=sys.stderr,
            level=_level(config.level),
            format="%(asctime)s %(levelname)s %(name)s %(message)s",
            force=True,
        )

    def bind_command(command: str | None, **context: Any) -> None:
        pass

    def get_logger(name: str | None = None) -> Any:
        return logging.getLogger(name or __name__)
