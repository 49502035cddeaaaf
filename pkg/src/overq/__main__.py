import sys

from overq.cli import main

sys.exit(main())
