"""
Pacote do catálogo de entradas de benchmark.

Este pacote define a grade de seis dimensões, a forma da FFT derivada, o
estimador de memória das constantes de colisão e o catálogo das seis
entradas de referência.
"""

from inputs.catalogo import (MEMORIA_PUBLICADA_GB, catalog, catalog_names,
                             dump_input_file, find_input, load_input_file)
from inputs.grade import (BenchmarkInput, CollisionKind, CollisionMode, FftShape,
                          GridShape, derive_fft_shape, estimate_collision_memory,
                          scale_input)

__version__ = '1.0.0'

__all__ = [
    'BenchmarkInput', 'CollisionKind', 'CollisionMode', 'FftShape', 'GridShape',
    'MEMORIA_PUBLICADA_GB', 'catalog', 'catalog_names', 'derive_fft_shape',
    'dump_input_file', 'estimate_collision_memory', 'find_input',
    'load_input_file', 'scale_input',
]
