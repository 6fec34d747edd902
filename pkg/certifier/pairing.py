"""
Nonvanishing of the local pairing between formal-group classes
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class PairingStatus:
    nonvanishing: bool
    indeterminate: bool = False


def pairing_status(level_a: int, level_b: int, p: int, f: int = 1) -> PairingStatus:
    """
    Over Q_p(zeta_p) the pairing of classes of levels i and j is nonzero
    exactly when i + j = p. For residue degree f > 1 the criterion is only
    known up to a trace condition, so a complementary pair is reported as
    indeterminate.
    """
    for level in (level_a, level_b):
        if not 1 <= level <= p:
            raise ValueError(f"level {level} outside 1..{p}")
    complementary = level_a + level_b == p
    if f == 1:
        return PairingStatus(complementary)
    return PairingStatus(False, indeterminate=complementary)


def pairing_nonvanishing(level_a: int, level_b: int, p: int, f: int = 1) -> bool:
    return pairing_status(level_a, level_b, p, f).nonvanishing
