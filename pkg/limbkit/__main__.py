import sys

from limbkit.cli import main

sys.exit(main())
