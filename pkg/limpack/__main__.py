from limpack.cli import main

raise SystemExit(main())
