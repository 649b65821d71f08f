"""Affine and projective lifted Reed-Solomon codes.

Construction via degree sets, encoding, smooth local correction, and
structural analysis (shortening/puncturing, information sets,
quasi-cyclicity, distance bounds, dimension tables).
"""

from liftedcodes.gf import GF, ExtensionIso, FieldElement, FiniteField, ext_iso, field_new
from liftedcodes.geometry import LineEmbedding, Support, enumerate_points, standardize
from liftedcodes.degrees import adeg, pdeg
from liftedcodes.codes import MonomialCode, Word, encode, make_code
from liftedcodes.decode import CorrectionConfig, local_correct, mc_experiment, prs_decode
from liftedcodes.analysis import distance_report, information_set, qc_certificate, rate_table

__all__ = [
    "GF", "FiniteField", "FieldElement", "ExtensionIso", "ext_iso", "field_new",
    "Support", "LineEmbedding", "enumerate_points", "standardize",
    "adeg", "pdeg",
    "MonomialCode", "Word", "make_code", "encode",
    "CorrectionConfig", "prs_decode", "local_correct", "mc_experiment",
    "information_set", "qc_certificate", "distance_report", "rate_table",
]

__version__ = "0.1.0"
