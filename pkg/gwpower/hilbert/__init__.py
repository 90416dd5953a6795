"""
Goettsche-type generating series
"""

from gwpower.hilbert.goettsche import (
    SeriesRequest,
    classical_series,
    goettsche_series,
    punctual_series,
    real_goettsche,
    real_macdonald,
)

__all__ = [
    "SeriesRequest",
    "classical_series",
    "goettsche_series",
    "punctual_series",
    "real_goettsche",
    "real_macdonald",
]
