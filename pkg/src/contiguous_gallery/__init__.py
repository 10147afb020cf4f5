"""Exact solver for the contiguous art gallery problem on simple polygons."""
