import sys

from betaproc.cli.main import main

sys.exit(main())
