# Application entry point for the Exponential Congruence Toolkit
from expcong.cli import main

if __name__ == '__main__':
    # Settings come from flags, then EXPCONG_* environment variables (.env honoured)
    main()
