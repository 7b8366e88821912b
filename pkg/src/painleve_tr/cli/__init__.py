"""Command-line interface."""

from .main import ANCHORS, EXIT_CONFIG, EXIT_FAIL, EXIT_PASS, ConfigError, Report, build_parser, main
