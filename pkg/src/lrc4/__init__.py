"""lrc4: optimal quaternary locally repairable codes.

Construct the 27 parameter families of distance-optimal GF(4) locally
repairable codes, verify every claimed parameter exactly, check the
finite-geometry necessary conditions, and simulate erasure repair.
"""

from .backend import BACKEND_NAME

__all__ = ["BACKEND_NAME", "__version__"]

__version__ = "0.1.0"
