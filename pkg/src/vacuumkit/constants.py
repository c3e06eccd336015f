"""Physical constants, CODATA-2018 values, strict SI.

The values are compiled in and immutable so that every run of the library
is reproducible; unit conveniences belong to the command line layer.
"""

from dataclasses import dataclass

# Reduced Planck constant [J s]
HBAR = 1.054571817e-34

# Speed of light in vacuum [m/s]
C = 299792458.0

# Boltzmann constant [J/K]
K_B = 1.380649e-23


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = HBAR
    c: float = C
    k_B: float = K_B


CODATA = PhysicalConstants()
