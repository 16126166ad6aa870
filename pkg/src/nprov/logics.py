from __future__ import annotations

import enum


class Logic(str, enum.Enum):
    """The four logics: N, N plus the Rosser rule, N plus the 4 axiom, and both."""

    N = "N"
    NR = "NR"
    NF = "NF"
    NRF = "NRF"

    @property
    def rosser(self) -> bool:
        return self in (Logic.NR, Logic.NRF)

    @property
    def four(self) -> bool:
        return self in (Logic.NF, Logic.NRF)

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "Logic":
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise ValueError(f"unknown logic {name!r}; expected one of N, NR, NF, NRF") from None


ALL_LOGICS = (Logic.N, Logic.NR, Logic.NF, Logic.NRF)
