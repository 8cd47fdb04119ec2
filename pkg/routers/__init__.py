"""Routers package for API endpoints."""
