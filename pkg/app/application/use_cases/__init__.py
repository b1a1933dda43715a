"""
Application use cases.
"""

from .campaign import RunCampaignUseCase, evaluate_instance, render_csv
from .check_graph import CheckGraphUseCase, SolveMwisUseCase
from .generate import GenerateInstanceUseCase
from .solve_eds import SolveEdsUseCase

__all__ = [
    "CheckGraphUseCase",
    "GenerateInstanceUseCase",
    "RunCampaignUseCase",
    "SolveEdsUseCase",
    "SolveMwisUseCase",
    "evaluate_instance",
    "render_csv",
]
