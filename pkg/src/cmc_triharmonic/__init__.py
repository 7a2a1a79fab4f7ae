"""Exact verification engine for CMC triharmonic hypersurfaces in space forms."""

__version__ = "0.1.0"
