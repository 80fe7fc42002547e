import sys

from tdalgebra.cli import main

sys.exit(main())
