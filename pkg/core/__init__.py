"""
Core framework package for the QDKD laboratory.

This package contains reusable components with no protocol semantics:
- Numeric substrate (linear algebra, eigensolver, entropies)
- Fock-space states, gates and projectors
- Command registry, decorators and exit codes
- Error hierarchy
- Core utilities (logging)
"""

from .utils import get_logger, setup_logger

__version__ = "1.0.0"

__all__ = [
    "get_logger",
    "setup_logger",
]
