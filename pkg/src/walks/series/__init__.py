from .biv_series import BivSeries, r_series
from .kernel import (
    Branch, elementary_symmetric, g_series_iterated, kernel_residual,
    kernel_root_series, kernel_roots, psi_series, r_at, xi_series
)
from .sqrt_series import SqrtSeries, compose_into
from .useries import USeries, arith, from_integers

__all__ = [
    'BivSeries', 'r_series', 'Branch', 'elementary_symmetric',
    'g_series_iterated', 'kernel_residual', 'kernel_root_series',
    'kernel_roots', 'psi_series', 'r_at', 'xi_series', 'SqrtSeries',
    'compose_into', 'USeries', 'arith', 'from_integers',
]
