import sys

from pyfedcoalition.fcCli import main

sys.exit(main())
