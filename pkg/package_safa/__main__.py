"""Run the `safa` command with `python -m package_safa`."""

from package_safa.safa_cli import main

raise SystemExit(main())
