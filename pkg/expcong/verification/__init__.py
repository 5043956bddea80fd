# Verification package: theorem suites over finite ranges at preset scales
from .engine import THEOREMS, VerificationEngine

__all__ = ['THEOREMS', 'VerificationEngine']
