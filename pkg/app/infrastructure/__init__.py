"""
Infrastructure layer: file formats, engine adapters, configuration and logging.
"""
