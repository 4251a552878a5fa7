"""L systems for group-theoretic languages."""

__version__ = "0.1.0"
