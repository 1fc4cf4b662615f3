import sys

from minseps.cli import main

sys.exit(main())
