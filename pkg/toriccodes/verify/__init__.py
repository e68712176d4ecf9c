from .checks import VerifyContext
from .runner import VerificationRunner

__all__ = ["VerificationRunner", "VerifyContext"]
