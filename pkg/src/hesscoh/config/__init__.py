"""Runtime configuration."""

from .settings import SETTINGS, HessCohSettings

__all__ = ["SETTINGS", "HessCohSettings"]
