# Command-line package (click command group)
from .commands import cli, main

__all__ = ['cli', 'main']
