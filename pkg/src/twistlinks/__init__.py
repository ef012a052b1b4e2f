"""Exact Jones polynomial machinery for 3-braid links and T-links of braid index three."""

from .braidword import BraidWord, parse
from .polyhalf import HalfLaurent
from .tlink import CanonicalForm3, TLink, parse_tlink, tier_reduce

__all__ = ["BraidWord", "parse", "HalfLaurent", "TLink", "CanonicalForm3", "parse_tlink", "tier_reduce"]
__version__ = "0.1.0"
