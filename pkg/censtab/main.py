"""Command-line entry point."""

import sys
from typing import List, Optional

from pydantic import ValidationError

from censtab.cli.commands import HANDLERS
from censtab.cli.parser import build_parser, to_run_config
from censtab.cli.tables import ReportTables
from censtab.core.exceptions import IllDefinedMapError, InvalidInputError, ResourceLimitError
from censtab.core.utils.file_handler import format_validation_error
from censtab.core.utils.logger import configure_logging, get_logger
from monitoring.metrics import metrics_collector

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; the report goes to stdout, diagnostics to stderr."""
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_INPUT

    if namespace.log_level:
        configure_logging(namespace.log_level)

    try:
        config = to_run_config(namespace)
    except ValidationError as e:
        print(format_validation_error("arguments", e), file=sys.stderr)
        return EXIT_INPUT

    try:
        report = HANDLERS[config.command](config)
    except (InvalidInputError, IllDefinedMapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as e:
        metrics_collector.record_resource_limit()
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        if config.metrics_file:
            metrics_collector.write(config.metrics_file)

    if config.output == "json":
        print(report.to_json(config.timings))
    else:
        print(ReportTables().render(report, config.timings))

    if not report.coverage_complete:
        return EXIT_RESOURCE
    return EXIT_PASS if report.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
