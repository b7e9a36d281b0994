import sys

from equiareal.cli import main

sys.exit(main())
