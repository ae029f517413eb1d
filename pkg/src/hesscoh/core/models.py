"""
Data models for hesscoh reports and certificates.

Every computation that can fail mathematically returns one of these models
with a ``passed`` flag and counterexample payload instead of raising.
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class Provenance(Enum):
    """Where the generators of an ideal came from."""

    FLAG_RELATIONS = "flag relations"
    PETERSON_QUADRATICS = "Peterson quadratics"
    HESSENBERG = "f_{h(j),j}"
    USER = "user-supplied"


class TermPayload(BaseModel):
    coeff: str = Field(..., description="Exact rational as 'p/q' or 'p'")
    exp: List[int] = Field(..., description="Exponent vector in context order")


class PolynomialPayload(BaseModel):
    """JSON schema for a SparsePolynomial."""

    vars: List[str] = Field(..., description="Variable names of the context")
    terms: List[TermPayload] = Field(default_factory=list)

    @classmethod
    def from_polynomial(cls, poly) -> "PolynomialPayload":
        return cls.model_validate(poly.to_json())

    def to_polynomial(self):
        from ..algebra.polyring import SparsePolynomial

        return SparsePolynomial.from_json(self.model_dump())


class Counterexample(BaseModel):
    label: str = Field(..., description="What was being checked")
    point: str = Field(default="", description="Fixed point or degree where it failed")
    value: str = Field(default="", description="Offending value, formatted")


class PointValue(BaseModel):
    point: str = Field(..., description="Fixed point in one-line notation or as a word")
    value: str = Field(..., description="Restriction at that point")


class FixedPointsReport(BaseModel):
    h: List[int]
    fixed_points: List[List[int]] = Field(default_factory=list)
    count: int = 0
    indecomposable: bool = False


class BilleyReport(BaseModel):
    cartan: str
    v_word: List[int] = Field(..., description="Reduced word of v")
    w: str = Field(..., description="One-line notation (type A) or reduced word of w")
    word_used: List[int] = Field(..., description="Reduced word of w the sum runs over")
    occurrences: List[List[int]] = Field(default_factory=list)
    value: PolynomialPayload
    value_text: str = ""


class FlagRelationsReport(BaseModel):
    n: int
    checks: int = 0
    passed: bool = True
    failures: List[Counterexample] = Field(default_factory=list)


class PetersonClassReport(BaseModel):
    label: str = Field(..., description="'A' with n, or a Cartan type label")
    subset: List[int]
    v_word: List[int] = Field(default_factory=list)
    values: List[PointValue] = Field(default_factory=list)


class MonkTerm(BaseModel):
    subset: List[int]
    closed: str = Field(..., description="Closed-form structure constant")
    oracle: str = Field(..., description="Constant from the localization solve")


class MonkReport(BaseModel):
    label: str
    i: int
    subset: List[int]
    diagonal_closed: str
    diagonal_oracle: str
    terms: List[MonkTerm] = Field(default_factory=list)
    nonnegative_integers: bool = True
    passed: bool = True


class GiambelliReport(BaseModel):
    label: str
    subset: List[int]
    factor: str = Field(..., description="Rational factor in front of the product of p_{s_i}")
    passed: bool = True
    failures: List[Counterexample] = Field(default_factory=list)


class CartanPairCheck(BaseModel):
    i: int
    j: int
    cartan_integer: int
    coefficient: str
    passed: bool


class GeneralPetersonReport(BaseModel):
    cartan: str
    subset: List[int]
    v_word: List[int] = Field(default_factory=list)
    values: List[PointValue] = Field(default_factory=list)
    monk: List[MonkReport] = Field(default_factory=list)
    giambelli: Optional[GiambelliReport] = None
    reduced_word_count: int = 0
    ordering_independent: bool = True
    cartan_pairs: List[CartanPairCheck] = Field(default_factory=list)
    passed: bool = True


class BasisReport(BaseModel):
    label: str
    size: int
    triangular: bool = True
    diagonal_nonzero: bool = True
    rank: int = 0
    degree_counts: Dict[int, int] = Field(
        default_factory=dict, description="Cohomological degree -> number of basis classes"
    )
    passed: bool = True
    failures: List[Counterexample] = Field(default_factory=list)


class FijEntry(BaseModel):
    i: int
    j: int
    degree: int = Field(..., description="Cohomological degree")
    polynomial: str


class FijReport(BaseModel):
    n: int
    t0: bool = False
    entries: List[FijEntry] = Field(default_factory=list)


class IdealReport(BaseModel):
    label: str
    provenance: str
    equivariant: bool = True
    generators: List[str] = Field(default_factory=list)
    generators_json: List[PolynomialPayload] = Field(default_factory=list)


class HilbertReport(BaseModel):
    label: str
    equivariant: bool = False
    up_to: int = Field(..., description="Cohomological degree bound")
    dimensions: Dict[int, int] = Field(default_factory=dict)
    expected: Dict[int, int] = Field(default_factory=dict)
    expected_series: str = ""
    passed: bool = True

    @field_validator("up_to")
    @classmethod
    def _even(cls, value: int) -> int:
        if value < 0 or value % 2:
            raise ValueError("cohomological degree bounds are even and nonnegative")
        return value


class RegularityReport(BaseModel):
    generator_degrees: List[int] = Field(..., description="Cohomological degrees")
    variable_count: int
    up_to: int
    hilbert_matches: bool = True
    finite_dimensional: Optional[bool] = None
    regular: bool = True
    failures: List[Counterexample] = Field(default_factory=list)


class VanishingRow(BaseModel):
    generator: str
    point: str
    value: str


class VanishingReport(BaseModel):
    label: str
    checks: int = 0
    passed: bool = True
    rows: List[VanishingRow] = Field(default_factory=list)
    failures: List[Counterexample] = Field(default_factory=list)


class MonomialBasisReport(BaseModel):
    h: List[int]
    size: int
    total_dimension: int
    independent: bool = True
    passed: bool = True
    failures: List[Counterexample] = Field(default_factory=list)


class HessenbergCertificate(BaseModel):
    h: List[int]
    indecomposable: bool
    fixed_point_count: int
    vanishing: VanishingReport
    hilbert: HilbertReport
    regularity: RegularityReport
    monomial_basis: MonomialBasisReport
    passed: bool = True


class VerifyAllBudget(BaseModel):
    """Work a verify-all run will do, known before any certificate starts."""

    n: int
    hessenberg_functions: int = Field(..., description="Catalan(n)")
    fixed_points: int = Field(..., description="Fixed points summed over every h")
    vanishing_checks: int = Field(..., description="n restrictions per fixed point")
    top_degree: int = Field(..., description="Largest cohomological degree swept by the graded checks")
    max_n: int = Field(..., description="verify_all_max_n in effect")


class VerifyAllReport(BaseModel):
    n: int
    count: int = 0
    budget: Optional[VerifyAllBudget] = None
    certificates: List[HessenbergCertificate] = Field(default_factory=list)
    passed: bool = True


class IdealEqualityReport(BaseModel):
    left: str
    right: str
    up_to: int = Field(..., description="Cohomological degree swept")
    left_in_right: bool = True
    right_in_left: bool = True
    dimensions_agree: bool = True
    equal: bool = True


class PetersonPresentationReport(BaseModel):
    label: str
    relations: List[str] = Field(default_factory=list)
    ideal_equality: Optional[IdealEqualityReport] = None
    vanishing: Optional[VanishingReport] = None
    hilbert_ordinary: Optional[HilbertReport] = None
    hilbert_equivariant: Optional[HilbertReport] = None
    passed: bool = True


class ContinuedFractionReport(BaseModel):
    c: List[str] = Field(..., description="Recursion constants, one per step")
    m_max: int
    values: List[str] = Field(default_factory=list)
    all_positive: bool = True
    defined: bool = True
    failed_at: Optional[int] = None
    passed: bool = True


class CommandRequest(BaseModel):
    """Validated CLI request; built before any computation starts."""

    command: str
    action: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1, le=10)
    h: Optional[List[int]] = None
    subset: Optional[List[int]] = None
    i: Optional[int] = None
    v: Optional[str] = None
    w: Optional[str] = None
    word: Optional[List[int]] = None
    cartan: Optional[str] = None
    c: Optional[str] = None
    m: Optional[int] = Field(default=None, ge=0)
    up_to: Optional[int] = Field(default=None, ge=0)
    t0: bool = False
    json_output: bool = False
    allow_large: bool = False
