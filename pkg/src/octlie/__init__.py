"""Exact computations with split octonions, g2, the Albert algebra and G2 packets."""

__version__ = "0.1.0"
