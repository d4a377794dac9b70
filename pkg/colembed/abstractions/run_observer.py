from ..models import EmbedReport
from abc import ABC


class RunObserverBase(ABC):
    """Receives every finished embedding run."""

    # Observers that need the step-by-step transcript set this
    wants_transcript = False

    def start(self):
        pass

    def update(self, report: EmbedReport):
        pass

    def enabled(self):
        return False
