import sys

from ratpoint.cli import main

sys.exit(main())
