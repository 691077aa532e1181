"""
메인 진입점: python main.py <command> [flags]
"""
import sys

import click

from app.cli.commands import cli_app
from app.cli.error_handlers import EXIT_OK, report
from app.utils.parallel import SweepExecutor


def main(argv=None) -> int:
    try:
        result = cli_app(args=argv, prog_name="pt-spectra", standalone_mode=False)
    except click.ClickException as e:
        return report(e)
    except click.exceptions.Abort:
        return 1
    finally:
        SweepExecutor.cleanup()
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
