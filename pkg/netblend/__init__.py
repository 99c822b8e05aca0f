"""Imitate real networks with evolved mixtures of network-formation processes."""

__version__ = "1.0.0"
