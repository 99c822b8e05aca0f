"""Pydantic model describing a classical generator invocation."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BaselineModel(str, Enum):
    """Classical generators used to manufacture target graphs."""
    BA = "ba"
    ER = "er"
    WS = "ws"


class BaselineSpec(BaseModel):
    """Parameters of one baseline graph."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: BaselineModel
    n: int = Field(..., ge=1, description="Node count")
    m: Optional[int] = Field(default=None, ge=1, description="BA links per newcomer")
    p: Optional[float] = Field(default=None, ge=0.0, le=1.0, description="ER link or WS rewiring probability")
    k: Optional[int] = Field(default=None, ge=2, description="WS lattice degree")
    seed: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_parameters(self) -> "BaselineSpec":
        if self.model is BaselineModel.BA:
            if self.m is None:
                raise ValueError("BA needs m")
            if self.n <= self.m:
                raise ValueError(f"BA needs n > m, got n={self.n}, m={self.m}")
        elif self.model is BaselineModel.ER:
            if self.p is None:
                raise ValueError("ER needs p")
        else:
            if self.k is None or self.p is None:
                raise ValueError("WS needs k and p")
            if self.k % 2:
                raise ValueError(f"WS lattice degree must be even, got {self.k}")
            if self.k >= self.n:
                raise ValueError(f"WS needs n > k, got n={self.n}, k={self.k}")
        return self
