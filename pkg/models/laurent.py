from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Unit:
    """The factor ``sign * h^shift`` relating two polynomials; shift is doubled."""
    sign: int
    shift2: Exponent

    def to_text(self) -> str:
        mono = LaurentPoly.monomial(len(self.shift2), self.shift2, self.sign)
        return mono.to_text()


class LaurentPoly:
    """Sparse Laurent polynomial in h1..hk with integer coefficients.

    Exponents are stored doubled so half-integer powers stay integral.
    Instances are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("_k", "_terms")

    def __init__(self, k: int, terms: Optional[Mapping[Exponent, int]] = None):
        if k < 0:
            raise ValueError(f"variable count must be non-negative, got {k}")
        cleaned: Dict[Exponent, int] = {}
        for exp2, coeff in (terms or {}).items():
            exp2 = tuple(int(e) for e in exp2)
            if len(exp2) != k:
                raise ValueError(f"exponent {exp2} does not have {k} entries")
            if coeff:
                cleaned[exp2] = int(coeff)
        object.__setattr__(self, "_k", k)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls, k: int) -> "LaurentPoly":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "LaurentPoly":
        return cls(k, {(0,) * k: 1})

    @classmethod
    def monomial(cls, k: int, exp2: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(k, {tuple(exp2): coeff})

    @classmethod
    def variable(cls, k: int, i: int, power2: int = 2) -> "LaurentPoly":
        """h_i raised to power2/2; i is 1-based."""
        if not 1 <= i <= k:
            raise ValueError(f"variable index {i} outside 1..{k}")
        exp2 = [0] * k
        exp2[i - 1] = power2
        return cls(k, {tuple(exp2): 1})

    # ---- basic accessors ----

    @property
    def k(self) -> int:
        return self._k

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def sorted_terms(self) -> List[Tuple[Exponent, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp2: Iterable[int]) -> int:
        return self._terms.get(tuple(exp2), 0)

    def is_integral(self) -> bool:
        return all(e % 2 == 0 for exp2 in self._terms for e in exp2)

    def _check_same_k(self, other: "LaurentPoly") -> None:
        if self._k != other._k:
            raise ValueError(f"variable count mismatch: {self._k} vs {other._k}")

    # ---- ring operations ----

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_same_k(other)
        result = dict(self._terms)
        for exp2, coeff in other._terms.items():
            result[exp2] = result.get(exp2, 0) + coeff
        return LaurentPoly(self._k, result)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self._k, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self._k, {e: c * other for e, c in self._terms.items()})
        self._check_same_k(other)
        result: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp2 = tuple(a + b for a, b in zip(e1, e2))
                result[exp2] = result.get(exp2, 0) + c1 * c2
        return LaurentPoly(self._k, result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly.one(self._k)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._k == other._k and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._k, frozenset(self._terms.items())))

    def shift(self, exp2: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial h^(exp2/2)."""
        exp2 = tuple(exp2)
        return LaurentPoly(
            self._k,
            {tuple(a + b for a, b in zip(e, exp2)): c for e, c in self._terms.items()},
        )

    # ---- substitutions ----

    def specialize_to_one(self, variables: Iterable[int]) -> "LaurentPoly":
        """Set h_j = 1 for every 1-based j in ``variables``."""
        drop = set(variables)
        for j in drop:
            if not 1 <= j <= self._k:
                raise ValueError(f"variable index {j} outside 1..{self._k}")
        result: Dict[Exponent, int] = {}
        for exp2, coeff in self._terms.items():
            collapsed = tuple(0 if (i + 1) in drop else e for i, e in enumerate(exp2))
            result[collapsed] = result.get(collapsed, 0) + coeff
        return LaurentPoly(self._k, result)

    def invert_variables(self) -> "LaurentPoly":
        return LaurentPoly(self._k, {tuple(-e for e in exp2): c for exp2, c in self._terms.items()})

    def merge_variables(self, i: int, n: int) -> "LaurentPoly":
        """Replace h_i by n consecutive variables each carrying h_i's exponent."""
        if not 1 <= i <= self._k:
            raise ValueError(f"variable index {i} outside 1..{self._k}")
        if n < 1:
            raise ValueError(f"cable width must be positive, got {n}")
        result: Dict[Exponent, int] = {}
        for exp2, coeff in self._terms.items():
            spread = exp2[: i - 1] + (exp2[i - 1],) * n + exp2[i:]
            result[spread] = result.get(spread, 0) + coeff
        return LaurentPoly(self._k + n - 1, result)

    def embed(self, k: int, offset: int) -> "LaurentPoly":
        """View this polynomial inside k variables, its h1 becoming h_(offset+1)."""
        if offset < 0 or offset + self._k > k:
            raise ValueError(f"cannot embed {self._k} variables at offset {offset} into {k}")
        pad_left = (0,) * offset
        pad_right = (0,) * (k - offset - self._k)
        return LaurentPoly(k, {pad_left + e + pad_right: c for e, c in self._terms.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def equal_up_to_unit(self, other: "LaurentPoly") -> Optional[Unit]:
        """Return (sign, shift) with self == sign * h^shift * other, or None."""
        self._check_same_k(other)
        if self.is_zero() or other.is_zero():
            if self.is_zero() and other.is_zero():
                return Unit(1, (0,) * self._k)
            return None
        if len(self._terms) != len(other._terms):
            return None
        e_self, c_self = min(self._terms.items())
        e_other, c_other = min(other._terms.items())
        if c_self == c_other:
            sign = 1
        elif c_self == -c_other:
            sign = -1
        else:
            return None
        shift2 = tuple(a - b for a, b in zip(e_self, e_other))
        if (other * sign).shift(shift2) == self:
            return Unit(sign, shift2)
        return None

    # ---- rendering ----

    @staticmethod
    def _format_power(e2: int) -> str:
        if e2 % 2 == 0:
            return str(e2 // 2)
        return f"({e2}/2)"

    def _format_monomial(self, exp2: Exponent) -> str:
        parts = []
        for i, e2 in enumerate(exp2):
            if e2 == 0:
                continue
            if e2 == 2:
                parts.append(f"h{i + 1}")
            else:
                parts.append(f"h{i + 1}^{self._format_power(e2)}")
        return "*".join(parts)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        # higher total degree first, ties in exponent order
        display = sorted(self._terms.items(), key=lambda item: (-sum(item[0]), item[0]))
        for idx, (exp2, coeff) in enumerate(display):
            mono = self._format_monomial(exp2)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def to_json(self) -> List[dict]:
        return [{"exp2": list(exp2), "coeff": str(coeff)} for exp2, coeff in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"LaurentPoly(k={self._k}, {self.to_text()!r})"
