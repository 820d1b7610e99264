from __future__ import annotations

from realquintic.run.__main__ import main


if __name__ == "__main__":
    raise SystemExit(main())
