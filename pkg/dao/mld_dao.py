from pathlib import Path
from typing import List


class MLDDAO:
    def __init__(self, base_dir: str = "."):
        self.base_dir = Path(base_dir)

    def _resolve(self, path: str) -> Path:
        candidate = Path(path)
        if candidate.is_absolute() or candidate.exists():
            return candidate
        return self.base_dir / candidate

    def read_text(self, path: str) -> str:
        return self._resolve(path).read_text(encoding="utf-8")

    def list_fixtures(self) -> List[Path]:
        return sorted(self.base_dir.glob("*.mld"))
