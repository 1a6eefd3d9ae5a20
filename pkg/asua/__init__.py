"""
asua - expected absorption times of random walks on graphs
"""
import sys

from loguru import logger

__version__ = "0.1.0"
__logo__ = "🎲" if sys.stdout.encoding and sys.stdout.encoding.lower().startswith("utf") else ">"

logger.disable("asua")
