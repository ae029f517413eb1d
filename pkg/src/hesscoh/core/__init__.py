"""hesscoh core module."""

from .models import (
    HessenbergCertificate,
    HilbertReport,
    Provenance,
    RegularityReport,
    VanishingReport,
    VerifyAllBudget,
    VerifyAllReport,
)

__all__ = [
    "Provenance",
    "VanishingReport",
    "HilbertReport",
    "RegularityReport",
    "HessenbergCertificate",
    "VerifyAllBudget",
    "VerifyAllReport",
]
