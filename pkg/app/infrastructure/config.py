"""
Configuration management for the domination toolkit.
"""

import os
from dataclasses import dataclass, field

from structlog import get_logger

from ..application.exceptions import ConfigurationError
from ..domain.services.eds import DEFAULT_BRUTE_MAX_VERTICES, DEFAULT_X3C_MAX_TRIPLES
from ..domain.services.subgraph import DEFAULT_MAX_PATTERN_VERTICES
from ..domain.value_objects.solution import Engine

logger = get_logger(__name__)

DEFAULT_AUTO_ORDER = (Engine.SQUARE, Engine.S123, Engine.BRUTE)


@dataclass
class SolverConfig:
    """Size guards of the exponential routines and the ``auto`` engine order."""

    brute_max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES
    x3c_max_triples: int = DEFAULT_X3C_MAX_TRIPLES
    pattern_max_vertices: int = DEFAULT_MAX_PATTERN_VERTICES
    auto_engine_order: tuple[Engine, ...] = DEFAULT_AUTO_ORDER


@dataclass
class GeneratorConfig:
    """Random generator configuration."""

    hfree_max_tries: int = 2000


@dataclass
class CampaignConfig:
    """Campaign runner configuration."""

    workers: int = 1


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "WARNING"
    format: str = "console"
    enable_colors: bool = False

    @classmethod
    def from_env(cls) -> "LoggingConfig":
        return cls(
            level=os.getenv("LOG_LEVEL", "WARNING"),
            format=os.getenv("LOG_FORMAT", "console"),
            enable_colors=os.getenv("LOG_COLORS", "false").lower() == "true",
        )


@dataclass
class Config:
    """Main application configuration."""

    environment: str = "development"

    solver: SolverConfig = field(default_factory=SolverConfig)
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    campaign: CampaignConfig = field(default_factory=CampaignConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_env(cls) -> "Config":
        """Create configuration from environment variables."""
        try:
            return cls(
                environment=os.getenv("ENVIRONMENT", "development"),
                solver=SolverConfig(
                    brute_max_vertices=int(os.getenv("WED_BRUTE_MAX_VERTICES", str(DEFAULT_BRUTE_MAX_VERTICES))),
                    x3c_max_triples=int(os.getenv("WED_X3C_MAX_TRIPLES", str(DEFAULT_X3C_MAX_TRIPLES))),
                    pattern_max_vertices=int(
                        os.getenv("WED_PATTERN_MAX_VERTICES", str(DEFAULT_MAX_PATTERN_VERTICES))
                    ),
                    auto_engine_order=parse_engine_order(
                        os.getenv("WED_AUTO_ORDER", ",".join(e.value for e in DEFAULT_AUTO_ORDER))
                    ),
                ),
                generator=GeneratorConfig(
                    hfree_max_tries=int(os.getenv("WED_HFREE_MAX_TRIES", "2000")),
                ),
                campaign=CampaignConfig(
                    workers=int(os.getenv("WED_CAMPAIGN_WORKERS", "1")),
                ),
                logging=LoggingConfig.from_env(),
            )
        except ValueError as e:
            raise ConfigurationError(f"Invalid numeric setting: {e}") from e

    def validate(self) -> None:
        """Validate configuration."""
        if self.environment not in ["development", "testing", "production"]:
            raise ConfigurationError(f"Invalid environment: {self.environment}")

        guards = [
            ("WED_BRUTE_MAX_VERTICES", self.solver.brute_max_vertices, DEFAULT_BRUTE_MAX_VERTICES),
            ("WED_X3C_MAX_TRIPLES", self.solver.x3c_max_triples, DEFAULT_X3C_MAX_TRIPLES),
            ("WED_PATTERN_MAX_VERTICES", self.solver.pattern_max_vertices, DEFAULT_MAX_PATTERN_VERTICES),
        ]
        for name, value, ceiling in guards:
            if not 0 <= value <= ceiling:
                raise ConfigurationError(f"{name} must be between 0 and {ceiling}, got {value}")

        if not self.solver.auto_engine_order:
            raise ConfigurationError("WED_AUTO_ORDER must name at least one engine")
        if self.generator.hfree_max_tries < 1:
            raise ConfigurationError("WED_HFREE_MAX_TRIES must be positive")
        if self.campaign.workers < 1:
            raise ConfigurationError("WED_CAMPAIGN_WORKERS must be positive")
        if self.logging.format not in ["json", "console"]:
            raise ConfigurationError(f"Invalid log format: {self.logging.format}")

        if self.environment == "production" and self.logging.format != "json":
            logger.warning("Console log format in production", format=self.logging.format)


def parse_engine_order(text: str) -> tuple[Engine, ...]:
    order: list[Engine] = []
    for token in text.split(","):
        name = token.strip()
        if not name:
            continue
        try:
            engine = Engine(name)
        except ValueError as e:
            raise ConfigurationError(f"Unknown engine in WED_AUTO_ORDER: {name}") from e
        if engine not in order:
            order.append(engine)
    return tuple(order)


# Global configuration instance
_config: Config | None = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config.from_env()
        _config.validate()
        logger.info("Configuration loaded", environment=_config.environment)
    return _config


def set_config(config: Config) -> None:
    """Replace the global configuration (tests and the CLI use this)."""
    global _config
    config.validate()
    _config = config


def reset_config() -> None:
    global _config
    _config = None
