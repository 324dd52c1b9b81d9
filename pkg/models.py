from pydantic import BaseModel, Field
from typing import Optional, List, Tuple, Union, Any
from enum import Enum


# Enums
class GenKind(str, Enum):
    X = "x"
    H = "h"
    W = "w"


class OracleChoice(str, Enum):
    """`--verify` values; natural picks natural-A or natural-C by type."""
    ADJOINT = "adjoint"
    NATURAL = "natural"
    MINUSCULE = "minuscule"


# Ring element encoding: decimal string for residues, nested arrays for products
Param = Union[str, List[Any]]
Factor = Tuple[List[int], Param]


# Models
class SystemSpec(BaseModel):
    type: str
    rank: int


class GeneratorDoc(BaseModel):
    gen: GenKind
    root: List[int]
    param: Param


class WordDocument(BaseModel):
    system: SystemSpec
    ring: str
    word: List[GeneratorDoc] = []

    class Config:
        json_schema_extra = {
            "example": {
                "system": {"type": "A", "rank": 2},
                "ring": "zmod:6",
                "word": [
                    {"gen": "x", "root": [1, 0], "param": "4"},
                    {"gen": "h", "root": [0, 1], "param": "5"}
                ]
            }
        }


class GaussFormDocument(BaseModel):
    system: SystemSpec
    ring: str
    h: List[Param]
    u1: List[Factor] = []
    v: List[Factor] = []
    u2: List[Factor] = []


class Unitri5Document(BaseModel):
    system: SystemSpec
    ring: str
    blocks: List[List[Factor]] = Field(..., min_length=5, max_length=5)


class ConjugationDocument(BaseModel):
    system: SystemSpec
    ring: str
    conjugator: List[GeneratorDoc] = []
    u: List[Factor] = []
    h: List[Param]
    v: List[Factor] = []


class MatrixDocument(BaseModel):
    ring: str
    rep: str
    matrix: List[List[Param]]


class RootEntry(BaseModel):
    id: int
    root: List[int]
    height: int
    norm2: int


class RootTable(BaseModel):
    system: SystemSpec
    cartan: List[List[int]]
    num_positive: int
    roots: List[RootEntry]


class CommutatorRowDoc(BaseModel):
    alpha: List[int]
    beta: List[int]
    i: int
    j: int
    gamma: List[int]
    coeff: int


class ConstantsTable(BaseModel):
    system: SystemSpec
    rows: List[CommutatorRowDoc]


class CampaignReport(BaseModel):
    system: SystemSpec
    ring: str
    seed: int
    trials: int
    failures: int
    max_block_params: int
    failed_trials: List[int] = []
    elapsed_ms: Optional[int] = None


class StableRankReport(BaseModel):
    ring: str
    sr1: bool


class ErrorReport(BaseModel):
    error: str
    kind: str
