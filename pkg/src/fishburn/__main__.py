import sys

from fishburn.cli import main

sys.exit(main())
