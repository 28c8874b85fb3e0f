"""
Entry point for `python -m braid_workbench`.
"""

from cli import main

if __name__ == "__main__":
    main()
