import sys

from qsrg.cli import main

sys.exit(main())
