"""
Módulo do kernel de colisão (seção coll).

No modo Full cada ponto espacial tem uma matriz densa Nv × Nv (Nv =
d4·d5·d6) aplicada ao seu vetor de velocidade; no modo Simplified a
matriz é diagonal. As matrizes Full são materializadas com a precisão do
modo (4 ou 8 bytes), depois de conferida a estimativa de memória contra o
orçamento configurado.
"""

from dataclasses import dataclass

import numpy as np

from inputs.grade import CollisionMode, estimate_collision_memory
from utils.erros import ExecutionError, MemoryBudgetError
from utils.logger import setup_logger

logger = setup_logger('kernels.colisao')

# Peso da parte aleatória; as linhas somam 1, o que mantém v limitado
ACOPLAMENTO = 0.1


@dataclass(frozen=True)
class CollisionOperator:
    """Constantes de colisão materializadas."""

    mode: CollisionMode
    matrices: np.ndarray = None
    diagonal: np.ndarray = None


def build_collision_operator(grid, mode, seed, orcamento):
    """
    Materializa as constantes de colisão de uma grade.

    Args:
        grid (GridShape): Grade (reduzida)
        mode (CollisionMode): Modo de colisão
        seed (int): Semente do gerador
        orcamento (int): Orçamento de memória em bytes

    Returns:
        CollisionOperator: Operador pronto

    Raises:
        MemoryBudgetError: Se a estimativa exceder o orçamento
    """
    estimativa = estimate_collision_memory(grid, mode)
    if estimativa > orcamento:
        logger.error(f"Estimativa de {estimativa} bytes excede o orçamento de {orcamento} bytes")
        raise MemoryBudgetError(estimativa, orcamento)

    rng = np.random.default_rng([seed, 1])
    espacial, nv = grid.spatial(), grid.velocity()

    if not mode.is_full:
        diagonal = 1.0 - ACOPLAMENTO * rng.random((espacial, nv))
        return CollisionOperator(mode, diagonal=diagonal)

    dtype = np.float32 if mode.entry_bytes == 4 else np.float64
    matrices = rng.random((espacial, nv, nv), dtype=dtype)
    matrices /= matrices.sum(axis=2, keepdims=True)
    matrices *= ACOPLAMENTO
    indices = np.arange(nv)
    matrices[:, indices, indices] += dtype(1.0 - ACOPLAMENTO)
    logger.info(f"Constantes de colisão Full materializadas: {matrices.nbytes} bytes")
    return CollisionOperator(mode, matrices=matrices)


def coll_step(state, operator):
    """
    Aplica as constantes de colisão aos vetores de velocidade.

    Full: v ← A·v por ponto espacial. Simplified: v ← d∘v.

    Args:
        state (SpectralState): Estado atual
        operator (CollisionOperator): Constantes materializadas

    Returns:
        numpy.ndarray: Novos vetores de velocidade [espacial × Nv]
    """
    v = state.v
    if operator.matrices is not None:
        if operator.matrices.shape[:2] != v.shape:
            raise ExecutionError(f"Matrizes {operator.matrices.shape} incompatíveis com v {v.shape}")
        return np.matmul(operator.matrices, v[..., None])[..., 0].astype(np.float64)

    if operator.diagonal.shape != v.shape:
        raise ExecutionError(f"Diagonal {operator.diagonal.shape} incompatível com v {v.shape}")
    return operator.diagonal * v
