"""
Pacote dos kernels substitutos, um por seção cronometrada do CGYRO.

nl (colchete de Poisson via FFT), coll (matvec densa ou diagonal), str,
field e shear (substitutos de estêncil e redução) e mem (varredura de
memória).
"""

from kernels.colisao import CollisionOperator, build_collision_operator, coll_step
from kernels.estado import (SpectralState, build_state, checksum, hermitianize,
                            split_batch)
from kernels.memoria import MemoryBuffers, mem_pass
from kernels.nl import NlPlans, build_nl_plans, nl_step, poisson_bracket
from kernels.secoes import field_step, shear_step, str_step, velocity_weights

__version__ = '1.0.0'

__all__ = [
    'CollisionOperator', 'MemoryBuffers', 'NlPlans', 'SpectralState',
    'build_collision_operator', 'build_nl_plans', 'build_state', 'checksum',
    'coll_step', 'field_step', 'hermitianize', 'mem_pass', 'nl_step',
    'poisson_bracket', 'shear_step', 'split_batch', 'str_step',
    'velocity_weights',
]
