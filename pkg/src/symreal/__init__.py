"""Decide real emptiness of symmetric polynomial systems over Q."""

__version__ = "0.1.0"
