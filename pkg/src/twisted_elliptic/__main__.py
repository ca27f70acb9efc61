"""python -m twisted_elliptic"""

import sys

from .cli import main

sys.exit(main())
