# Allows `python -m expcong <subcommand> ...`
from .cli import main

if __name__ == '__main__':
    main()
