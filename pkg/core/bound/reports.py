from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, PrivateAttr


BlockKind = Literal["counter-diagonal", "zero", "zero*", "non-zero", "arbitrary"]


class BlockLabel(BaseModel):
    """A labeled rectangle in permuted coordinates; ranges are half-open."""

    label: BlockKind
    rows: Tuple[int, int]
    cols: Tuple[int, int]


class PartitionCertificate(BaseModel):
    wiretap: List[str]
    rank: int
    row_order: List[int]
    col_order: List[int]
    labels: List[BlockLabel] = Field(default_factory=list)
    t: int = 0
    a1_forward: List[str] = Field(default_factory=list)
    a1_backward: List[str] = Field(default_factory=list)
    a2: List[str] = Field(default_factory=list)
    signals: List[int] = Field(default_factory=list)
    verified: bool = False

    @property
    def a1(self) -> List[str]:
        return self.a1_forward + self.a1_backward


class WiretapRecord(BaseModel):
    edges: List[str]
    rows: List[int]
    size: int
    rank: int
    slack: int
    certificate: Optional[PartitionCertificate] = None


class CutBoundReport(BaseModel):
    cut: List[str]
    mask: int
    x: int
    y: int
    q: Optional[int] = None
    forward: List[str]
    backward: List[str]
    connectivity: List[List[int]]
    records: List[WiretapRecord] = Field(default_factory=list)
    raw_bound: int
    bound: int
    clamped: bool = False
    k_b: Optional[int] = None
    k_b_rows: Optional[List[str]] = None
    cbar: Optional[List[List[int]]] = None

    _rankmax = PrivateAttr(default=None)

    @property
    def rankmax(self):
        return self._rankmax

    @property
    def min_slack(self) -> int:
        return min((record.slack for record in self.records), default=0)


class CutSummary(BaseModel):
    cut: List[str]
    mask: int
    x: int
    y: int
    raw_bound: Optional[int] = None
    bound: Optional[int] = None
    skipped: bool = False


class BestBound(BaseModel):
    value: int
    raw: int
    argmin: CutBoundReport
    cuts: List[CutSummary]
