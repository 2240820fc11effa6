"""Mean perimeters of convex hulls of rotated planar Brownian motion."""

__version__ = "0.1.0"
