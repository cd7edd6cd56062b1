import logging
import sys

from limpack.shared import config

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(level: str | int | None = None) -> None:
    """Send library logs to stderr so stdout reports stay machine-parseable."""
    if level is None:
        level = config.LOG_LEVEL
    if isinstance(level, str):
        level = level.upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
