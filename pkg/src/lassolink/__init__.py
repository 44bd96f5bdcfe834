"""Link-diagram toolkit for lassoing moves and complete splitting numbers."""

__version__ = "0.1.0"
