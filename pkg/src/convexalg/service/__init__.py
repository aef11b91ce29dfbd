"""HTTP service wrapping the core library; the CLI calls the same handlers."""

from .app import create_app

__all__ = ["create_app"]
