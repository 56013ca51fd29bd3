"""
Módulo do estado espectral substituto.

O estado guarda dois campos espectrais F e G, um plano complexo
[d1 × d3] por membro do lote (ordem do lote: d2, d4, d5, d6), e os vetores
de velocidade [d1·d2·d3 × d4·d5·d6]. Tudo é gerado a partir de uma semente,
que fica registrada no estado.
"""

from dataclasses import dataclass

import numpy as np

from inputs.grade import GridShape
from utils.erros import PreconditionError


@dataclass(frozen=True)
class SpectralState:
    """Estado imutável sobre o qual os kernels operam."""

    grid: GridShape
    F: np.ndarray
    G: np.ndarray
    v: np.ndarray
    seed: int

    @property
    def batch(self):
        return self.F.shape[0]

    @classmethod
    def empty(cls, grid, seed=0):
        """Estado sem membros de lote nem vetores de velocidade."""
        planos = np.zeros((0, grid.d1, grid.d3), dtype=np.complex128)
        return cls(grid, planos, planos.copy(), np.zeros((0, grid.velocity())), seed)

    def with_fields(self, **campos):
        """Cópia do estado com F, G ou v substituídos."""
        valores = {'grid': self.grid, 'F': self.F, 'G': self.G, 'v': self.v, 'seed': self.seed}
        valores.update(campos)
        return SpectralState(**valores)


def hermitianize(planos):
    """
    Torna os planos consistentes com um campo real.

    A coluna toroidal n = 0 passa a satisfazer F(-kx) = conj(F(kx)) e a
    linha de Nyquist radial (índice d1/2) é zerada, pois seu par conjugado
    não é representável.

    Args:
        planos (numpy.ndarray): Planos [... × d1 × d3]

    Returns:
        numpy.ndarray: Nova cópia ajustada
    """
    planos = np.array(planos, dtype=np.complex128)
    d1 = planos.shape[-2]
    espelho = (-np.arange(d1)) % d1
    coluna = planos[..., :, 0]
    planos[..., :, 0] = 0.5 * (coluna + np.conj(coluna[..., espelho]))
    if d1 % 2 == 0:
        planos[..., d1 // 2, :] = 0.0
    return planos


def build_state(grid, seed, amplitude=None):
    """
    Gera o estado inicial determinístico de uma grade.

    Args:
        grid (GridShape): Grade (já reduzida para a bancada)
        seed (int): Semente do gerador
        amplitude (float): Amplitude dos modos; 1/(d1·d3) por padrão

    Returns:
        SpectralState: Estado inicial
    """
    if not grid.dealiasable():
        raise PreconditionError(f"d1={grid.d1} deve ser par")
    rng = np.random.default_rng(seed)
    amplitude = amplitude if amplitude is not None else 1.0 / (grid.d1 * grid.d3)
    forma = (grid.batch(), grid.d1, grid.d3)

    def campo():
        bruto = rng.standard_normal(forma) + 1j * rng.standard_normal(forma)
        return hermitianize(amplitude * bruto)

    F = campo()
    G = campo()
    v = rng.uniform(0.9, 1.1, size=(grid.spatial(), grid.velocity()))
    return SpectralState(grid, F, G, v, int(seed))


def checksum(state):
    """
    Soma de verificação do estado: Σ|F|² + Σv.

    Args:
        state (SpectralState): Estado

    Returns:
        float: Valor determinístico para uma mesma semente
    """
    return float(np.sum(state.F.real ** 2 + state.F.imag ** 2) + np.sum(state.v))


def split_batch(planos, partes):
    """
    Divide planos [lote × d1 × d3] em partições contíguas do lote.

    Args:
        planos (numpy.ndarray): Planos do lote inteiro
        partes (int): Número de partições (divide o lote)

    Returns:
        list: Partições
    """
    if planos.shape[0] % partes:
        raise PreconditionError(f"{partes} partições não dividem o lote de {planos.shape[0]}")
    return np.split(planos, partes, axis=0)
