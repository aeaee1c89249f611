"""Numerical tolerance tiers used across the package.

Three tiers, loosest to tightest: LOOKUP for matching operators against a
finite catalogue (net membership, Pauli decomposition), SPECTRAL for
quantities that pass through a diagonalization, ALGEBRAIC for identities
that are exact in infinite precision.  The environment variable
DWF_TOLERANCE_SCALE multiplies all three (default 1.0); it is read once at
import time.
"""

import os

SCALE = float(os.environ.get("DWF_TOLERANCE_SCALE", "1.0"))

ALGEBRAIC = 1e-12 * SCALE
SPECTRAL = 1e-10 * SCALE
LOOKUP = 1e-8 * SCALE

# Membership in the classical polytope is decided with extra slack so that
# diagonalization noise never flips the verdict for boundary states.
MEMBERSHIP = 1e-9 * SCALE
