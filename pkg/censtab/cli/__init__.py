from censtab.cli.parser import COMMANDS, RunConfig, build_parser, to_run_config

__all__ = ["COMMANDS", "RunConfig", "build_parser", "to_run_config"]
