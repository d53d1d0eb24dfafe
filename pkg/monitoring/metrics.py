"""Check metrics for censtab runs."""

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest

from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


class MetricsCollector:
    """Collect and export check metrics."""

    def __init__(self):
        self.registry = CollectorRegistry()
        self._setup_metrics()

    def _setup_metrics(self):
        """Setup Prometheus metrics."""
        # Counters
        self.checks_total = Counter(
            'censtab_checks_total',
            'Total number of checks run',
            ['kind', 'verdict'],
            registry=self.registry
        )

        self.cells_total = Counter(
            'censtab_cells_total',
            'Total number of degree or pair cells evaluated',
            ['kind'],
            registry=self.registry
        )

        self.resource_limit_total = Counter(
            'censtab_resource_limit_total',
            'Checks stopped by a resource cap',
            registry=self.registry
        )

        # Histograms
        self.check_duration = Histogram(
            'censtab_check_duration_seconds',
            'Time spent on one check',
            ['kind'],
            registry=self.registry
        )

    def record_check(self, kind: str, passed: bool, duration: float, cells: int = 0):
        """Record a finished check."""
        self.checks_total.labels(kind=kind, verdict="pass" if passed else "fail").inc()
        self.check_duration.labels(kind=kind).observe(duration)
        if cells:
            self.cells_total.labels(kind=kind).inc(cells)

    def record_resource_limit(self):
        self.resource_limit_total.inc()

    def get_metrics(self) -> str:
        """Get metrics in Prometheus format."""
        return generate_latest(self.registry).decode()

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.get_metrics())
        logger.info(f"metrics written to {path}")


# Global metrics collector
metrics_collector = MetricsCollector()
