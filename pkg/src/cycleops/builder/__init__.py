"""
Builders of cycleops configuration objects.
"""

from .settings import build_config
