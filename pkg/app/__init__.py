"""
Weighted efficient domination on chordal graphs.
"""
