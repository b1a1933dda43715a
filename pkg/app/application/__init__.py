"""
Application layer: use cases, request and report DTOs, application errors.
"""
