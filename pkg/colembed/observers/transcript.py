from ..models import EmbedReport
from ..abstractions import RunObserverBase
from ..configuration import ColembedConfig
import logging
import logging.handlers

TRANSCRIPT_LOGGER = "colembed.transcript"


class TranscriptRunObserver(RunObserverBase):
    """Writes the line-oriented run transcript to a rotating file."""

    wants_transcript = True

    def __init__(self, config: ColembedConfig):
        self.config = config
        self.str_name = "Transcript ({})".format(config.transcript_path)
        self.logger = logging.getLogger(TRANSCRIPT_LOGGER)

    def __str__(self):
        return self.str_name

    def start(self):
        maxBytes = self.config.transcript_max_mb * 1024 * 1024
        handler = logging.handlers.RotatingFileHandler(self.config.transcript_path, maxBytes=maxBytes)
        handler.setFormatter(logging.Formatter("%(message)s"))
        self.logger.addHandler(handler)
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False

    def update(self, report: EmbedReport):
        for line in report.transcript:
            self.logger.info(line)

    def enabled(self):
        return bool(self.config.transcript_path)
