"""
Dependency injection container and dependency providers.
"""

from functools import partial
from typing import Any

from dependency_injector import containers, providers

from ..application.use_cases import (
    CheckGraphUseCase,
    GenerateInstanceUseCase,
    RunCampaignUseCase,
    SolveEdsUseCase,
    SolveMwisUseCase,
)
from ..infrastructure.adapters import (
    BruteForceEngineAdapter,
    S123EngineAdapter,
    SquareEngineAdapter,
    build_engines,
)
from ..infrastructure.config import get_config
from ..infrastructure.repositories.campaign_spec_repository import CampaignSpecFileRepository
from ..infrastructure.repositories.edge_list_repository import (
    EdgeListGraphRepository,
    X3cFileRepository,
)


class Container(containers.DeclarativeContainer):
    """Dependency injection container."""

    # Configuration is re-read on every resolution so set_config() takes effect
    config = providers.Callable(get_config)

    # Repositories
    graph_repository = providers.Singleton(EdgeListGraphRepository)
    x3c_repository = providers.Singleton(X3cFileRepository)
    campaign_spec_repository = providers.Singleton(CampaignSpecFileRepository)

    # Engines
    brute_engine = providers.Factory(
        BruteForceEngineAdapter, max_vertices=config.provided.solver.brute_max_vertices
    )
    square_engine = providers.Singleton(SquareEngineAdapter)
    s123_engine = providers.Singleton(S123EngineAdapter)

    # Engine registry
    engines = providers.Dict(brute=brute_engine, square=square_engine, s123=s123_engine)
    engine_factory = providers.Factory(
        partial, build_engines, config.provided.solver.brute_max_vertices
    )

    # Use cases
    solve_eds_use_case = providers.Factory(
        SolveEdsUseCase,
        graph_repository=graph_repository,
        engines=engines,
        auto_order=config.provided.solver.auto_engine_order,
    )
    check_graph_use_case = providers.Factory(
        CheckGraphUseCase,
        graph_repository=graph_repository,
        pattern_max_vertices=config.provided.solver.pattern_max_vertices,
    )
    solve_mwis_use_case = providers.Factory(SolveMwisUseCase, graph_repository=graph_repository)
    generate_use_case = providers.Factory(
        GenerateInstanceUseCase,
        graph_repository=graph_repository,
        x3c_repository=x3c_repository,
        hfree_max_tries=config.provided.generator.hfree_max_tries,
    )
    campaign_use_case = providers.Factory(
        RunCampaignUseCase,
        engines=engines,
        engine_factory=engine_factory,
        workers=config.provided.campaign.workers,
        hfree_max_tries=config.provided.generator.hfree_max_tries,
        x3c_max_triples=config.provided.solver.x3c_max_triples,
    )


# Global container instance
container = Container()


def get_container() -> Any:
    """Get the global container instance."""
    return container
