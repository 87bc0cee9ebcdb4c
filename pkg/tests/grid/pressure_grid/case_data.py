from dataclasses import dataclass

import polytrack


@dataclass(frozen=True, slots=True)
class CaseData:
    params: polytrack.GasParams
    n: int
    j_min: int
    j_max: int
    volumes: dict[int, float]
    name: str
