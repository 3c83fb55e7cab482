"""Exact arithmetic for the algebra of planar binary trees and loop graphs,
its loop-raising differential and cohomology, and the symbolic topological
recursion on the Airy curve that the graph algebra represents.
"""

__version__ = "0.1.0"
