# Command-line entry point, e.g. `python main.py check monoids.mon threechain conical`
from src.cli.cli import entrypoint


if __name__ == "__main__":
    entrypoint()
