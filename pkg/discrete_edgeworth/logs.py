"""
Project logger and structured event lines.
"""

import json
import logging

logger = logging.getLogger("discrete_edgeworth")


def log_event(**kv) -> None:
    """Emit structured JSON log line."""
    logger.info(json.dumps(kv, separators=(",", ":"), default=str))


def banner(title: str) -> None:
    """Section banner for verbose pipeline output."""
    logger.info("=" * 60)
    logger.info(title)
    logger.info("=" * 60)
