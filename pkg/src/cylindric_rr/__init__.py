"""Cylindric partitions and exact q-series checks of the A2 Rogers-Ramanujan identities."""
from .cylindric import CylindricPartition, Profile, canonical, rotate
from .series import INFINITY, QSeries, VerificationReport, YSeries

__all__ = [
    "CylindricPartition",
    "INFINITY",
    "Profile",
    "QSeries",
    "VerificationReport",
    "YSeries",
    "canonical",
    "rotate",
]
__version__ = "0.1.0"
