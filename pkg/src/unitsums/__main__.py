import sys

from unitsums.cli import main

sys.exit(main())
