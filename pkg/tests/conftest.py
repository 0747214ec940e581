import sys
from pathlib import Path

# Allow tests to import the shared oracles module when run from anywhere.
sys.path.insert(0, str(Path(__file__).parent))
