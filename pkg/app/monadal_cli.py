"""
Command-line interface: parse arguments, run one pipeline, print its report.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional
from app.engine import Engine
from app.exceptions import CategoryError, ConfigurationError, FileOperationError, ScalarError
from app.monadal_config import config
from app.pipelines import FIXTURES_DIR, PipelineFactory, PipelineRequest
from app.report import emit_report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Raised instead of exiting when argparse rejects the command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monadal",
                     description="Construct and verify Hopf monads, centralizers, doubles and coends.")
    parser.add_argument("command", choices=PipelineFactory.get_available_commands())
    parser.add_argument("--category", type=Path, help="Category spec (JSON)")
    parser.add_argument("--hopf", type=Path, help="Hopf algebra spec (JSON)")
    parser.add_argument("--monad", type=str, default=None,
                        help="Hopf monad spec (JSON) or 'identity' (default)")
    parser.add_argument("--seed", type=int, default=config.seed,
                        help=f"Seed for randomized checks (default: {config.seed})")
    parser.add_argument("--samples", type=int, default=config.samples,
                        help=f"Random samples per randomized check (default: {config.samples})")
    parser.add_argument("--max-tuples", type=int, default=config.max_tuples,
                        help="Cap on simple tuples per arity, 0 for all")
    parser.add_argument("--out", type=Path, default=None,
                        help="Directory for dumps and the report file")
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--fixtures", type=Path, default=FIXTURES_DIR,
                        help="Fixture directory used by verify-all")
    return parser


def parse_request(argv: Optional[List[str]] = None) -> PipelineRequest:
    """
    Parse a command line into a request.

    Raises:
        UsageError: If the arguments are invalid
    """
    args = build_parser().parse_args(argv)
    if args.samples < 0 or args.max_tuples < 0:
        raise UsageError("--samples and --max-tuples must be non-negative")
    return PipelineRequest(
        command=args.command,
        category=args.category,
        hopf=args.hopf,
        monad=args.monad,
        seed=args.seed,
        samples=args.samples,
        max_tuples=args.max_tuples,
        out=args.out,
        fmt=args.fmt,
        fixtures=args.fixtures,
    )


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    """
    Run the command line and return the exit code.

    Malformed specs, unusable inputs and bad arguments exit with 2; failed
    checks and unwritable output with 1.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        request = parse_request(argv)
        result = Engine().run(request)
    except (UsageError, ScalarError, CategoryError, ConfigurationError) as e:
        print(f"[error] {e}", file=stderr)
        return EXIT_USAGE
    except FileOperationError as e:
        print(f"[error] {e}", file=stderr)
        return EXIT_FAIL
    stdout.write(emit_report(result.report, request.fmt).decode(config.default_encoding))
    return result.report.exit_code


def main() -> int:  # pragma: no cover
    return run()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
