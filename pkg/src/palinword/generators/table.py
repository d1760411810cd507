"""
Plain-text rendering of the claims table.
"""

from dataclasses import dataclass
from typing import List, Sequence

HEADERS = ("label", "palindromes", "exponent", "kind", "outcome")


@dataclass(frozen=True)
class ClaimRow:
    label: str
    palindromes: str
    exponent: str
    kind: str
    outcome: str

    def cells(self) -> List[str]:
        return [self.label, self.palindromes, self.exponent, self.kind, self.outcome]


def render_claims_table(rows: Sequence[ClaimRow]) -> str:
    """Render rows under a header, columns padded to their widest cell."""
    table = [list(HEADERS)] + [row.cells() for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(HEADERS))]

    def render(cells: List[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    lines = [render(table[0]), "  ".join("-" * w for w in widths)]
    lines.extend(render(cells) for cells in table[1:])
    return "\n".join(lines) + "\n"
