"""
Edge-list, X3C and campaign spec repositories.
"""
