"""
Módulo de dealiasing por preenchimento com zeros.

Os modos radiais seguem a ordem de wraparound da FFT (números de onda não
negativos no início, negativos no fim do eixo fft_x) e os modos toroidais
ocupam as d3 primeiras posições complexas do eixo rápido.
"""

import numpy as np

from inputs.grade import derive_fft_shape
from utils.erros import PreconditionError


def radial_wavenumbers(d1):
    """Números de onda radiais inteiros na ordem da FFT."""
    return np.fft.fftfreq(d1, d=1.0 / d1).round().astype(np.int64)


def toroidal_wavenumbers(d3):
    """Números de onda toroidais 0..d3-1."""
    return np.arange(d3, dtype=np.int64)


def _extensoes(grid, fft_shape):
    fft_shape = fft_shape or derive_fft_shape(grid)
    return fft_shape.fft_x, fft_shape.fft_y // 2 + 1


def dealias_pad(modes, grid, fft_shape=None):
    """
    Posiciona os modos retidos na grade espectral estendida.

    Aceita um plano [d1 × d3] ou um lote [... × d1 × d3].

    Args:
        modes (numpy.ndarray): Modos complexos
        grid (GridShape): Grade da entrada
        fft_shape (FftShape): Forma estendida; derivada da grade por padrão

    Returns:
        numpy.ndarray: Espectro [... × fft_x × ny2] com zeros fora dos modos

    Raises:
        PreconditionError: Se os modos não couberem nas extensões
    """
    modes = np.asarray(modes)
    nx, ny2 = _extensoes(grid, fft_shape)
    d1, d3 = modes.shape[-2:]
    if (d1, d3) != (grid.d1, grid.d3):
        raise PreconditionError(f"Modos {d1}x{d3} não correspondem à grade ({grid.d1}x{grid.d3})")
    if d1 > nx or d3 > ny2:
        raise PreconditionError(f"Modos {d1}x{d3} excedem a extensão estendida {nx}x{ny2}")

    meio = d1 // 2
    padded = np.zeros(modes.shape[:-2] + (nx, ny2), dtype=np.complex128)
    padded[..., :meio, :d3] = modes[..., :meio, :]
    padded[..., nx - (d1 - meio):, :d3] = modes[..., meio:, :]
    return padded


def truncate(padded, grid, fft_shape=None):
    """
    Inversa à esquerda de dealias_pad: recupera os modos retidos.

    Args:
        padded (numpy.ndarray): Espectro estendido [... × fft_x × ny2]
        grid (GridShape): Grade da entrada
        fft_shape (FftShape): Forma estendida; derivada da grade por padrão

    Returns:
        numpy.ndarray: Modos [... × d1 × d3]
    """
    padded = np.asarray(padded)
    nx, ny2 = _extensoes(grid, fft_shape)
    if padded.shape[-2:] != (nx, ny2):
        raise PreconditionError(f"Espectro {padded.shape[-2:]} difere da extensão {nx}x{ny2}")

    d1, d3 = grid.d1, grid.d3
    meio = d1 // 2
    modes = np.empty(padded.shape[:-2] + (d1, d3), dtype=np.complex128)
    modes[..., :meio, :] = padded[..., :meio, :d3]
    modes[..., meio:, :] = padded[..., nx - (d1 - meio):, :d3]
    return modes
