import sys
from pathlib import Path

# make src/ importable without an editable install
sys.path.insert(0, str(Path(__file__).parent / "src"))
