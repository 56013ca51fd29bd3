"""
Fixtures compartilhadas dos testes da bancada.
"""

import os
import sys

import numpy as np
import pytest

# Adiciona o diretório raiz ao path para importar módulos do projeto
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from inputs.catalogo import catalog, find_input  # noqa: E402
from inputs.grade import GridShape, scale_input  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240922)


@pytest.fixture
def n102_reduzida():
    """n102 reduzida por 1/8: grade (24 x 24 x 4 x 2 x 8 x 2)."""
    return scale_input(find_input('n102'), '1/8')


@pytest.fixture
def grade_minima():
    """Grade pequena com 4 modos radiais, 3 toroidais e lote 4."""
    return GridShape(4, 2, 3, 2, 1, 1)


@pytest.fixture
def entradas():
    return {entrada.name: entrada for entrada in catalog()}
