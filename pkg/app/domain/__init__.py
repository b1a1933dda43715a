"""
Domain layer: graphs, weights, the engines and their oracles.
"""
