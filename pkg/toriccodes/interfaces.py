from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

Source = Literal["formula", "oracle", "both-agree"]


class DegreeDecomposition(BaseModel):
    d: int = Field(..., ge=1)
    q: int = Field(..., ge=3)
    k: int = Field(..., ge=0)
    ell: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _consistent(self):
        if self.ell > self.q - 2 or self.d != self.k * (self.q - 2) + self.ell:
            raise ValueError(f"d={self.d} != {self.k}*(q-2)+{self.ell} with 1 <= ell <= q-2")
        return self


class CodeParameters(BaseModel):
    q: int
    s: int
    d: int = Field(..., ge=0)
    n: int = Field(..., ge=1, description="Length |X|")
    k: int = Field(..., ge=1, description="Dimension H_X(d)")
    delta: int = Field(..., ge=1, description="Minimum distance")
    source: Source
    k_formula: Optional[int] = None
    delta_formula: Optional[int] = None
    delta_oracle: Optional[int] = None

    @property
    def singleton_defect(self) -> int:
        return self.n - self.k + 1 - self.delta

    @property
    def mds(self) -> bool:
        return self.singleton_defect == 0

    def report(self) -> Dict[str, Any]:
        data = self.model_dump()
        data.update({
            "mds": self.mds,
            "singleton_defect": self.singleton_defect,
            "rate": round(self.k / self.n, 6),
            "relative_distance": round(self.delta / self.n, 6),
        })
        return data


class TableRow(BaseModel):
    q: int
    s: int
    d: int
    n: int
    k: int
    delta_formula: Optional[int] = None
    delta_oracle: Optional[int] = None
    hilbert: int
    singleton_defect: int
    mds: bool


class HilbertProfile(BaseModel):
    q: int
    s: int
    values: List[int]
    regularity: int = Field(..., ge=0)
    degree: int = Field(..., ge=1, description="|X|, where the profile stabilizes")


class HilbertSeriesCI(BaseModel):
    q: int
    s: int
    numerator: List[int]

    @property
    def regularity(self) -> int:
        return len(self.numerator) - 1


class RegularityReport(BaseModel):
    q: int
    s: int
    size: int
    values: List[int]
    regularity: int
    bound: int
    equality: bool
    ci: bool


class BoundReport(BaseModel):
    q: int
    s: int
    d: int
    schmidt: int
    schmidt_homogeneous: int
    torus: int
    refined: Optional[int] = None
    refined_applicable: bool
    k: Optional[int] = None
    ell: Optional[int] = None


class BoundCheck(BaseModel):
    polynomial: str
    q: int
    s: int
    degree: int
    canonical_degree: Optional[int] = None
    torus_zeros: int
    affine_zeros: Optional[int] = None
    nontrivial_zeros: Optional[int] = None
    margins: Dict[str, int] = Field(default_factory=dict)


class SweepReport(BaseModel):
    q: int
    s: int
    seed: int
    samples: int
    cases: int
    min_margins: Dict[str, int]
    tight: Dict[str, int] = Field(default_factory=dict, description="cases meeting a bound with equality")


class MaxZeroReport(BaseModel):
    q: int
    s: int
    d: int
    size: int
    extremal_zeros: int
    oracle_zeros: int
    formula_zeros: int
    polynomial: str


class CheckResult(BaseModel):
    check: str
    theorem: str = Field(..., description="Theorem or lemma a failure of this check refutes")
    params: Dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail", "skip"]
    reason: Optional[str] = None
    values: Dict[str, Any] = Field(default_factory=dict)


class VerifyReport(BaseModel):
    grid_q: List[int]
    grid_s: List[int]
    seed: int
    passed: int
    failed: int
    skipped: int
    failures: List[str]
    checks: List[CheckResult]


class RunConfig(BaseModel):
    p: int = Field(..., ge=2, description="Field characteristic")
    m: int = Field(1, ge=1, description="Extension degree, q = p^m")
    s: Optional[int] = Field(None, ge=1, description="Number of homogeneous coordinates of the torus")
    clutter: Optional[str] = Field(None, description="Path of a clutter JSON file")
    d: Optional[int] = Field(None, ge=0)
    d_range: Optional[Tuple[int, int]] = None
    cap_points: Optional[int] = Field(None, gt=0)
    cap_codewords: Optional[int] = Field(None, gt=0)
    format: Literal["json", "csv", "text"] = "json"
    seed: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _one_input(self):
        if (self.s is None) == (self.clutter is None):
            raise ValueError("give exactly one of --s and --clutter")
        if self.d is not None and self.d_range is not None:
            raise ValueError("give at most one of --d and --d-range")
        if self.d_range is not None and not 0 <= self.d_range[0] <= self.d_range[1]:
            raise ValueError(f"degree range {list(self.d_range)} is not 0 <= lo <= hi")
        return self


class VerifyConfig(BaseModel):
    grid_q: List[int] = Field(..., min_length=1, description="Field orders of the grid, each a prime power")
    grid_s: List[Annotated[int, Field(ge=1)]] = Field(..., min_length=1)
    samples: Optional[int] = Field(None, ge=0, description="Random polynomials per bound-sweep cell")
    workers: Optional[int] = Field(None, ge=1)
    cap_points: Optional[int] = Field(None, gt=0)
    cap_codewords: Optional[int] = Field(None, gt=0)
    seed: Optional[int] = Field(None, ge=0)
    inject_fault: bool = False
