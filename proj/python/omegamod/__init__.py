"""Residue-class distribution of Omega(n), the number of prime factors of n
counted with multiplicity."""

from ._omegamod import *  # noqa: F401,F403
from ._omegamod import OmegamodError, __doc__ as _ext_doc  # noqa: F401
