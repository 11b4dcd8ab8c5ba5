"""Exact certificates for equistarable and equistable graphs."""

__version__ = "0.1.0"
