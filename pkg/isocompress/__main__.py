import sys

from isocompress.cli.cli import main

sys.exit(main())
