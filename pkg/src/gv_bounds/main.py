#!/usr/bin/env python3
"""Entry point for the gv-bounds command line."""

import sys

from gv_bounds import app


def main() -> None:
    """Run the subcommand given on the command line and exit with its status."""
    args = app.handle_args()

    sys.exit(app.run_app(args))


if __name__ == "__main__":
    main()
