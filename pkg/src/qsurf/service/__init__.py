"""HTTP service and shared request/response models."""

from . import api, models

__all__ = ["api", "models"]
