"""Triangulations of dilated simplices: representation, builders, validation,
and exact convexity certificates."""

from .core import Triangulation, ValidationReport, validate
from .iv3 import build_iv3
from .iv4 import build_iv4, product_triangles_triangulation
from .sd import build_sd3, build_sd4
from .ad import build_ad4, default_ad_triples
from .twod import complete_primitive
from .lift import LiftCertificate, certify_convexity, construct_lift

__all__ = [
    "Triangulation",
    "ValidationReport",
    "validate",
    "build_iv3",
    "build_iv4",
    "build_sd3",
    "build_sd4",
    "build_ad4",
    "default_ad_triples",
    "product_triangles_triangulation",
    "complete_primitive",
    "LiftCertificate",
    "certify_convexity",
    "construct_lift",
]
