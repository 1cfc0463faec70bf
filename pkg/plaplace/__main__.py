import sys

from plaplace.app import main

sys.exit(main())
