from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from core.bound import BestBound, CutBoundReport
from core.code import CodeDocument, CodeVerdict, FailureRate
from core.network import DEFAULT_NODE_CAP, NetworkDocument
from core.rankmax import DEFAULT_ENUM_CAP, DEFAULT_RETRIES


Subcommand = Literal["bound", "code", "verify", "simulate"]


class RunConfig(BaseModel):
    subcommand: Subcommand
    input: str
    code: Optional[str] = None
    q: Optional[int] = None
    seed: int = Field(default=0, ge=0)
    cut: Optional[List[str]] = None
    node_cap: int = DEFAULT_NODE_CAP
    enum_cap: int = DEFAULT_ENUM_CAP
    retries: int = DEFAULT_RETRIES
    T: int = 10
    trials: int = Field(default=0, ge=0)
    out: Optional[str] = None
    verbosity: int = 0


class BoundOutput(BaseModel):
    config: RunConfig
    bound: int
    raw_bound: int
    argmin: CutBoundReport
    best: Optional[BestBound] = None


class CodeOutput(BaseModel):
    config: RunConfig
    bound: int
    cut: List[str]
    notice: Optional[str] = None
    code: Optional[CodeDocument] = None
    exhaustive: Optional[bool] = None
    failure_rate: Optional[FailureRate] = None
    upper_bounding_network: Optional[NetworkDocument] = None


class VerifyOutput(BaseModel):
    config: RunConfig
    mode: Literal["exhaustive", "algebraic-only"]
    secure: bool
    decodable: bool
    failing_sets: List[List[str]] = Field(default_factory=list)
    verdict: CodeVerdict


class SimulateSummary(BaseModel):
    config: RunConfig
    T: int
    q: int
    R_s: int
    rate: str
    rate_value: float
    causal: bool
    decoded: bool
    secure: bool
    insecure_sets: List[List[str]] = Field(default_factory=list)

    @classmethod
    def of(cls, config: RunConfig, trace: Any) -> "SimulateSummary":
        fields: Dict[str, Any] = trace.model_dump(exclude={"rounds"})
        return cls(config=config, **fields)
