"""Strong-ties social network fragmentation under population control policies."""

__version__ = "0.1.0"
