"""Machine-checked replay reports: survivors, certificates, conclusions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .basket import WeightedBasket


def frac(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class SurvivorRow:
    wb: WeightedBasket
    horizon: int
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        seq = self.wb.plurigenera(self.horizon)
        return {
            "basket": self.wb.basket.text(),
            "p1": self.wb.p1,
            "volume": frac(self.wb.volume()),
            "rX": self.wb.gorenstein_index(),
            "rmax": self.wb.basket.r_max(),
            "P": list(seq.values),
            **{k: v for k, v in sorted(self.notes.items())},
        }


@dataclass(frozen=True)
class EliminatedRow:
    wb: WeightedBasket
    certificate: str
    branch: str = ""

    def to_json(self) -> dict:
        out = {
            "basket": self.wb.basket.text(),
            "p1": self.wb.p1,
            "certificate": self.certificate,
        }
        if self.branch:
            out["branch"] = self.branch
        return out


@dataclass
class ReplayReport:
    case: str
    constraints: str
    survivors: list[SurvivorRow] = field(default_factory=list)
    eliminated: list[EliminatedRow] = field(default_factory=list)
    conclusion: str = ""
    axioms: list[str] = field(default_factory=list)
    leaves: list[dict] = field(default_factory=list)
    coverage: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "case": self.case,
            "constraints": self.constraints,
            "survivors": [s.to_json() for s in self.survivors],
            "eliminated": [e.to_json() for e in self.eliminated],
            "conclusion": self.conclusion,
        }
        if self.axioms:
            out["axioms"] = sorted(set(self.axioms))
        if self.leaves:
            out["leaves"] = self.leaves
        if self.coverage:
            out["coverage"] = self.coverage
        return out

    def json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def render(self) -> str:
        lines = [f"case: {self.case}", f"constraints: {self.constraints}"]
        if self.leaves:
            lines.append(f"leaves ({len(self.leaves)}):")
            for leaf in self.leaves:
                lines.append("  " + json.dumps(leaf, sort_keys=False))
        lines.append(f"survivors ({len(self.survivors)}):")
        for s in self.survivors:
            row = s.to_json()
            extra = {
                k: v
                for k, v in row.items()
                if k not in ("basket", "p1", "volume", "rX", "rmax", "P")
            }
            lines.append(
                f"  {row['basket']}  p1={row['p1']}  -K^3={row['volume']}"
                f"  rX={row['rX']}  P={row['P']}"
                + (f"  {extra}" if extra else "")
            )
        lines.append(f"eliminated ({len(self.eliminated)}):")
        for e in self.eliminated:
            tag = f"[{e.branch}] " if e.branch else ""
            lines.append(f"  {tag}{e.wb.basket.text()}  p1={e.wb.p1}: {e.certificate}")
        if self.coverage:
            lines.append("coverage:")
            lines.extend(f"  {note}" for note in self.coverage)
        if self.axioms:
            lines.append("axioms consumed: " + ", ".join(sorted(set(self.axioms))))
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines)

    def eliminated_certificates(self, branch: Optional[str] = None) -> list[str]:
        return [
            e.certificate
            for e in self.eliminated
            if branch is None or e.branch == branch
        ]
