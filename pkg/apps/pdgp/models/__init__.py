"""Re-export Pydantic schemas for convenient imports."""

from apps.pdgp.models.schemas import (
    BiPolyJson,
    RunConfig,
    UniPolyJson,
    VerifyReport,
    poly_to_schema,
)

__all__ = [
    "BiPolyJson",
    "RunConfig",
    "UniPolyJson",
    "VerifyReport",
    "poly_to_schema",
]
