"""
Enable running `quiverlab` with `python -m quiverlab`.
"""

from quiverlab import main

if __name__ == "__main__":
    main()
