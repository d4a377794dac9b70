from ..models import EmbedReport
from ..abstractions import RunObserverBase
from ..configuration import ColembedConfig
from prometheus_client import Counter, start_http_server

counter_embed_runs = Counter('colembed_embed_runs', 'Number of embedding runs', ['mode', 'outcome'])
counter_restarts = Counter('colembed_embed_restarts', 'Number of restarts attempted', ['mode'])
counter_resamples = Counter('colembed_resamples', 'Number of resample steps', ['mode'])


class PrometheusRunObserver(RunObserverBase):

    def __init__(self, config: ColembedConfig):
        self.port = config.metrics_port

    def __str__(self):
        return "Prometheus"

    def start(self):
        start_http_server(self.port)
        return "(http://127.0.0.1:{}/metrics)".format(self.port)

    def update(self, report: EmbedReport):
        outcome = "success" if report.success else "failure"
        counter_embed_runs.labels(mode=report.mode, outcome=outcome).inc()
        counter_restarts.labels(mode=report.mode).inc(report.restarts)
        counter_resamples.labels(mode=report.mode).inc(report.resamples)

    def enabled(self):
        return self.port is not None
