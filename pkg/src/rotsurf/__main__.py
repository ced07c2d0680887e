import sys

from rotsurf.cli import main

sys.exit(main())
