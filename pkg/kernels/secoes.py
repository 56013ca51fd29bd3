"""
Módulo dos kernels substitutos das seções str, field e shear.

Estes kernels não reproduzem a aritmética do CGYRO; preservam o formato de
custo de cada seção e têm oráculos exatos em instâncias pequenas.
"""

import numpy as np

from utils.erros import ExecutionError


def _por_dimensao(state):
    g = state.grid
    return state.F.reshape(g.d2, g.d4, g.d5, g.d6, g.d1, g.d3)


def velocity_weights(grid):
    """Pesos de quadratura uniformes 1/Nv."""
    nv = grid.velocity()
    return np.full(nv, 1.0 / nv)


def field_step(state, weights=None):
    """
    Redução no espaço de velocidade e multiplicação de F pelo campo.

    field[s] = Σ_v w_v·v[s, v]; em seguida F ← F·field, com o campo
    (d1, d2, d3) difundido sobre as dimensões de velocidade do lote.

    Args:
        state (SpectralState): Estado atual
        weights (numpy.ndarray): Pesos [Nv]; uniformes por padrão

    Returns:
        tuple: (campo [d1·d2·d3], novo F)
    """
    g = state.grid
    pesos = velocity_weights(g) if weights is None else np.asarray(weights, dtype=np.float64)
    if pesos.shape != (g.velocity(),):
        raise ExecutionError(f"Pesos {pesos.shape} incompatíveis com Nv={g.velocity()}")

    campo = state.v @ pesos
    fator = campo.reshape(g.d1, g.d2, g.d3).transpose(1, 0, 2)
    F = _por_dimensao(state) * fator[:, None, None, None, :, :]
    return campo, F.reshape(state.F.shape)


def str_step(state, shift=1):
    """
    Deslocamento periódico do lote ao longo de d2 (streaming).

    Args:
        state (SpectralState): Estado atual
        shift (int): Posições deslocadas; d2 equivale à identidade

    Returns:
        numpy.ndarray: Novo F
    """
    return np.roll(_por_dimensao(state), shift, axis=0).reshape(state.F.shape)


def shear_step(state, shift=1):
    """
    Desloca os modos radiais kx → kx + shift nas colunas toroidais n > 0.

    Só as colunas n > 0 se deslocam em d1; a coluna zonal (n = 0, índice
    0 do último eixo) fica no lugar, portanto um único modo em n = 0 não
    muda de kx. O modo que sai da borda é descartado e a posição liberada
    recebe zero.

    Args:
        state (SpectralState): Estado atual
        shift (int): +1 ou -1 (qualquer inteiro é aceito)

    Returns:
        numpy.ndarray: Novo F
    """
    F = np.array(state.F)
    if shift == 0 or F.shape[-1] < 2:
        return F

    ordenado = np.fft.fftshift(F[..., 1:], axes=-2)
    deslocado = np.zeros_like(ordenado)
    if shift > 0:
        deslocado[..., shift:, :] = ordenado[..., :-shift, :]
    else:
        deslocado[..., :shift, :] = ordenado[..., -shift:, :]
    F[..., 1:] = np.fft.ifftshift(deslocado, axes=-2)
    return F
