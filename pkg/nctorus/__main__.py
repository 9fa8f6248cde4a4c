import sys
from nctorus.cli import main

sys.exit(main())
