import sys

from chromabound.cli import main

sys.exit(main())
