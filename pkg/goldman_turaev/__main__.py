from goldman_turaev.cli import main

raise SystemExit(main())
