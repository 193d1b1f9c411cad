"""Spectra of Beurling-Fourier algebras on SU(n), the Heisenberg groups and E(2).

The subpackages turn weight families on group duals into concrete numbers:
tableau combinatorics for SU(n), weight evaluation and validity checks,
Fourier kernels on the Heisenberg group, and membership oracles for the
Gelfand spectrum inside the complexified group.
"""

__version__ = "0.1.0"

from .verdict import Report, Status, Verdict  # noqa: F401
from .descriptors import WeightDescriptor, parse_descriptor  # noqa: F401
