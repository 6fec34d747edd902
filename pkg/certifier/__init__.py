"""Good-point certification, decomposition and the pairing criterion"""
from .certificate import GOOD, NOT_GOOD, GoodPointCertificate
from .decompose import TRIVIAL, Decomposition, decompose
from .good import (
    certify_good,
    family_coefficient,
    family_structure,
    formal_component,
    reduction_lambda,
    restrict_level_to_L,
    torsion_lift,
)
from .pairing import PairingStatus, pairing_nonvanishing, pairing_status
