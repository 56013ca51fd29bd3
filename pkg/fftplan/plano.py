"""
Módulo de planejamento e execução de FFTs 2D em lote.

O planejamento acontece uma vez por forma; o PlanHandle resultante é
imutável, pode ser compartilhado entre threads e executado quantas vezes
for preciso sobre buffers distintos.
"""

from dataclasses import dataclass

import numpy as np

from fftplan.backends import FftBackend, NumpyBackend
from fftplan.especificacao import (BackendSemantics, Direction, LogicalPlanSpec,
                                   PlanDescriptor, describe)
from utils.erros import ExecutionError, PlanningError
from utils.logger import setup_logger

logger = setup_logger('fftplan.plano')


@dataclass(frozen=True)
class PlanHandle:
    """Plano opaco e reutilizável."""

    spec: LogicalPlanSpec
    semantics: BackendSemantics
    descriptor: PlanDescriptor
    backend: FftBackend
    token: object


def plan(spec, sem, backend=None):
    """
    Planeja uma FFT 2D em lote.

    Args:
        spec (LogicalPlanSpec): Especificação lógica
        sem (BackendSemantics): Semântica de planejamento
        backend (FftBackend): Backend; o de referência por padrão

    Returns:
        PlanHandle: Plano reutilizável

    Raises:
        PlanningError: Se a especificação for inválida ou o backend recusar
    """
    backend = backend or NumpyBackend()
    descriptor = describe(spec, sem)

    erros = spec.problems()
    if erros:
        logger.error(f"Planejamento recusado para {descriptor}: {'; '.join(erros)}")
        raise PlanningError(f"Especificação inválida: {'; '.join(erros)}", descriptor)
    if not backend.supports(spec.direction):
        raise PlanningError(
            f"Backend {backend.name} não suporta {spec.direction.value}", descriptor
        )

    token = backend.plan(descriptor, sem, spec.direction)
    logger.debug(f"Plano {spec.direction.value} {descriptor} criado no backend {backend.name}")
    return PlanHandle(spec, sem, descriptor, backend, token)


def _conferir_direcao(handle, direcao):
    if handle.spec.direction is not direcao:
        raise ExecutionError(
            f"Plano {handle.spec.direction.value} usado para executar {direcao.value}"
        )


def execute_c2r(handle, entrada, out=None):
    """
    Executa a transformada complexo→real de cada membro do lote.

    Args:
        handle (PlanHandle): Plano C2R
        entrada (numpy.ndarray): Meio-espectro [nffts × nx × ny2]
        out (numpy.ndarray): Buffer de saída opcional [nffts × nx × 2·ny2]

    Returns:
        numpy.ndarray: Campo real [nffts × nx × 2·ny2]; só as ny primeiras
            colunas de cada linha são significativas

    Raises:
        ExecutionError: Se as formas não corresponderem ao plano
    """
    _conferir_direcao(handle, Direction.C2R)
    entrada = np.asarray(entrada)
    if out is None:
        out = np.empty(handle.spec.real_shape(), dtype=np.float64)
    return handle.backend.execute(handle.token, entrada, out)


def execute_r2c(handle, entrada, out=None):
    """
    Executa a transformada real→complexo de cada membro do lote.

    Args:
        handle (PlanHandle): Plano R2C
        entrada (numpy.ndarray): Campo real [nffts × nx × ny] ou com passo
            de linha 2·ny2
        out (numpy.ndarray): Buffer de saída opcional [nffts × nx × ny2]

    Returns:
        numpy.ndarray: Meio-espectro [nffts × nx × ny2], sem normalização

    Raises:
        ExecutionError: Se as formas não corresponderem ao plano
    """
    _conferir_direcao(handle, Direction.R2C)
    entrada = np.asarray(entrada)
    if out is None:
        out = np.empty(handle.spec.complex_shape(), dtype=np.complex128)
    return handle.backend.execute(handle.token, entrada, out)


def destroy(handle):
    """Libera o plano no backend."""
    handle.backend.destroy(handle.token)
