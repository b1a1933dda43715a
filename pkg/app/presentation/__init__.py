"""
Presentation layer: the wed command line and the dependency container.
"""
