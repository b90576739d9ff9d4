import sys
from app.monadal_cli import run


def main():  # pragma: no cover
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
