"""
Pacote de planejamento de FFTs 2D em lote.

Este pacote normaliza uma especificação lógica de FFT para as semânticas
de diferentes bibliotecas, planeja e executa as transformadas no backend
de referência e faz o preenchimento de dealiasing.
"""

from fftplan.backends import BACKENDS, FftBackend, NumpyBackend, get_backend
from fftplan.dealias import (dealias_pad, radial_wavenumbers, toroidal_wavenumbers,
                             truncate)
from fftplan.especificacao import (BackendSemantics, Direction, Dispatch, EmbedStyle,
                                   LogicalPlanSpec, PlanDescriptor, RankOrder,
                                   logical_dims, normalize, semantics_for_library)
from fftplan.plano import PlanHandle, destroy, execute_c2r, execute_r2c, plan

__version__ = '1.0.0'

__all__ = [
    'BACKENDS', 'BackendSemantics', 'Direction', 'Dispatch', 'EmbedStyle',
    'FftBackend', 'LogicalPlanSpec', 'NumpyBackend', 'PlanDescriptor',
    'PlanHandle', 'RankOrder', 'dealias_pad', 'destroy', 'execute_c2r',
    'execute_r2c', 'get_backend', 'logical_dims', 'normalize', 'plan',
    'radial_wavenumbers', 'semantics_for_library', 'toroidal_wavenumbers',
    'truncate',
]
