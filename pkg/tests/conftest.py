import sys
from pathlib import Path

# Make the shared oracle helpers importable as `oracles` from any test module.
sys.path.insert(0, str(Path(__file__).parent))
