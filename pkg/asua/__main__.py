"""
Entry point for running asua as a module: python -m asua
"""

from asua.cli.commands import app

if __name__ == "__main__":
    app()
