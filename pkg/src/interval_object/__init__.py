"""Exact arithmetic on [-1, 1] by sign streams, and the symbolic calculus of
opens of Cantor space that exhibits [-1, 1] as a quotient of it."""

__version__ = "0.1.0"
