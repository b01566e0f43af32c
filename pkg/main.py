"""
Command line entry point
"""
from socialrank import create_cli

cli = create_cli()

if __name__ == "__main__":
    cli()  # pylint: disable=no-value-for-parameter
