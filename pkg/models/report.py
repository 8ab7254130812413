from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.laurent import LaurentPoly, Unit


@dataclass(frozen=True)
class SkeinEntry:
    crossing: int
    strand: int
    plus: LaurentPoly
    minus: LaurentPoly
    zero: LaurentPoly
    # "half" for h^(1/2) - h^(-1/2), "linear" for 1 - h
    factor: Optional[str] = None
    unit: Optional[Unit] = None

    @property
    def holds(self) -> bool:
        return self.factor is not None


@dataclass(frozen=True)
class SkeinReport:
    entries: Tuple[SkeinEntry, ...]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    checks: Tuple[IdentityCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)


@dataclass
class CheckReport:
    seed: int
    max_crossings: int
    suites: Dict[str, SuiteResult] = field(default_factory=dict)
    # diagrams whose filtration vectors were not integral
    non_integral: List[str] = field(default_factory=list)
    case_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.suites.values())

    def suite(self, name: str) -> SuiteResult:
        return self.suites.setdefault(name, SuiteResult(name=name))


@dataclass(frozen=True)
class IdentityOptions:
    amalgam: bool = True
    compose: bool = True
    mirror: bool = True
    # cable this strand of the first diagram; None skips the satellite check
    satellite_strand: Optional[int] = None
    satellite_width: int = 2
