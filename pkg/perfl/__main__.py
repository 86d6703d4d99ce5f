from sys import exit

from perfl.out.cli import main


exit(main())
