import sys

from youngbraid.cli import main

sys.exit(main())
