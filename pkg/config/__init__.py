"""Configuration package for the Hurwitz CF toolkit."""

from .settings import settings

__all__ = ["settings"]
