# Standard library imports
from contextlib import contextmanager
import logging
import time

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class StageTimer:
    """
    Wall-clock seconds per named pipeline stage.

    Re-entering a stage adds to its total, so loops over degrees can time
    themselves under one name. ``failed`` names the innermost stage an
    exception escaped from.
    """

    def __init__(self):
        self.timings = {}
        self.failed = None

    @contextmanager
    def stage(self, name):
        start = time.perf_counter()
        try:
            yield
        except Exception:
            if self.failed is None:
                self.failed = name
            raise
        finally:
            elapsed = time.perf_counter() - start
            self.timings[name] = self.timings.get(name, 0.0) + elapsed
            logger.debug(f"Stage {name} took {elapsed:.3f}s")

    def as_dict(self, digits=3):
        return {name: round(seconds, digits) for name, seconds in self.timings.items()}


def format_duration(seconds):
    """
    Format a duration in seconds for log lines.

    Args:
        seconds (float): Duration.

    Returns:
        str: e.g. "850ms", "12.4s" or "3m05s".
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.1f}s"
    minutes, rest = divmod(int(round(seconds)), 60)
    return f"{minutes}m{rest:02d}s"
