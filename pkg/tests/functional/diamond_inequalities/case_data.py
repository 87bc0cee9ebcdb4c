from dataclasses import dataclass

import polytrack


@dataclass(frozen=True, slots=True)
class CaseData:
    diamond: polytrack.analysis.CompleteDiamond
    outcome: polytrack.CheckOutcome
    name: str
