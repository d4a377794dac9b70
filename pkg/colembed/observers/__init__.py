from .prometheus import PrometheusRunObserver
from .transcript import TranscriptRunObserver
