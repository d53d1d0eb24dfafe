from dataclasses import dataclass
from typing import Any, Optional

from sympy import isprime

from censtab.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: the integers or a prime field."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Z":
            if self.p is not None:
                raise InvalidInputError("the integer ring takes no modulus")
        elif self.kind == "Fp":
            if self.p is None or not isprime(self.p):
                raise InvalidInputError(f"prime field needs a prime modulus, got {self.p}")
        else:
            raise InvalidInputError(f"unknown ring kind '{self.kind}'")

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls("Z")

    @classmethod
    def prime_field(cls, p: int) -> "RingSpec":
        return cls("Fp", p)

    @classmethod
    def parse(cls, value: Any) -> "RingSpec":
        """Parse "Z", "F3", "Fp:3" or {"Fp": 3}."""
        if isinstance(value, RingSpec):
            return value
        if isinstance(value, dict):
            if set(value) != {"Fp"}:
                raise InvalidInputError(f"ring object must look like {{\"Fp\": p}}, got {value}")
            return cls.prime_field(int(value["Fp"]))
        if isinstance(value, str):
            text = value.strip()
            if text.upper() in ("Z", "ZZ"):
                return cls.integers()
            if text.upper().startswith("FP:"):
                text = "F" + text[3:]
            if text[:1].upper() == "F" and text[1:].isdigit():
                return cls.prime_field(int(text[1:]))
        raise InvalidInputError(f"cannot parse ring '{value}'")

    @property
    def is_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def label(self) -> str:
        return "Z" if self.kind == "Z" else f"F{self.p}"

    def reduce(self, value: int) -> int:
        return value % self.p if self.is_field else value

    def is_unit(self, value: int) -> bool:
        if self.is_field:
            return value % self.p != 0
        return value in (1, -1)

    def inverse(self, value: int) -> int:
        if not self.is_unit(value):
            raise ValueError(f"{value} is not a unit in {self.label}")
        if self.is_field:
            return pow(value, -1, self.p)
        return value

    def __str__(self) -> str:
        return self.label


ZZ = RingSpec.integers()
