"""
Módulo dos backends de FFT.

Este módulo define a interface de adaptador (FftBackend) que uma ligação
com biblioteca de fabricante deve implementar: plan(descritor) → token,
execute(token, entrada, saida) e destroy(token). O backend de referência
(NumpyBackend) usa numpy.fft, que trabalha com qualquer tamanho em
O(N log N), e segue a convenção não normalizada das bibliotecas de
fabricante: C2R seguida de R2C multiplica por nx·ny.
"""

import abc
from dataclasses import dataclass

import numpy as np

from fftplan.especificacao import Direction, RankOrder, logical_dims
from utils.erros import ExecutionError, PlanningError
from utils.logger import setup_logger

logger = setup_logger('fftplan.backends')


class FftBackend(abc.ABC):
    """Interface de adaptador para bibliotecas de FFT em lote."""

    name = 'abstrato'

    @abc.abstractmethod
    def supports(self, direction):
        """Indica se o backend executa a direção pedida."""

    @abc.abstractmethod
    def plan(self, descriptor, sem, direction):
        """
        Cria o plano nativo para um descritor.

        Args:
            descriptor (PlanDescriptor): Descritor na semântica sem
            sem (BackendSemantics): Semântica do descritor
            direction (Direction): C2R ou R2C

        Returns:
            object: Token nativo do plano

        Raises:
            PlanningError: Se o backend não aceitar o descritor
        """

    @abc.abstractmethod
    def execute(self, token, entrada, saida):
        """Executa o plano de entrada para saida (buffers distintos)."""

    def destroy(self, token):
        """Libera recursos do plano; o backend de referência não tem nenhum."""


@dataclass(frozen=True)
class _PlanoNumpy:
    direction: Direction
    nx: int
    ny: int
    ny2: int
    nffts: int


class NumpyBackend(FftBackend):
    """Backend de referência portátil sobre numpy.fft."""

    name = 'numpy'

    def supports(self, direction):
        return direction in (Direction.C2R, Direction.R2C)

    def plan(self, descriptor, sem, direction):
        if not descriptor.positive():
            raise PlanningError(f"Descritor com entradas não positivas: {descriptor}", descriptor)

        nx, ny = logical_dims(descriptor, sem)
        ny2 = ny // 2 + 1
        if sem.rank_order is RankOrder.REVERSED:
            embed_esperado = (ny2, nx)
        else:
            embed_esperado = (ny2, ny2)
        if descriptor.inembed != embed_esperado or descriptor.onembed != embed_esperado:
            raise PlanningError(
                f"Arrays embed {descriptor.inembed}/{descriptor.onembed} incompatíveis com "
                f"a semântica {sem.name} (esperado {embed_esperado})", descriptor
            )
        if descriptor.idist != ny2 * nx or descriptor.odist != ny2 * nx:
            raise PlanningError(
                f"Distâncias idist={descriptor.idist}/odist={descriptor.odist} diferem de "
                f"ny2*nx={ny2 * nx}", descriptor
            )
        return _PlanoNumpy(direction, nx, ny, ny2, descriptor.nffts)

    def execute(self, token, entrada, saida):
        forma_complexa = (token.nffts, token.nx, token.ny2)
        forma_real = (token.nffts, token.nx, 2 * token.ny2)

        if token.direction is Direction.C2R:
            if entrada.shape != forma_complexa:
                raise ExecutionError(f"Entrada C2R com forma {entrada.shape}, plano espera {forma_complexa}")
            if saida.shape != forma_real:
                raise ExecutionError(f"Saída C2R com forma {saida.shape}, plano espera {forma_real}")
            # norm='forward' deixa a inversa sem o fator 1/(nx·ny)
            saida[..., :token.ny] = np.fft.irfft2(entrada, s=(token.nx, token.ny),
                                                  axes=(1, 2), norm='forward')
            saida[..., token.ny:] = 0.0
        else:
            if entrada.shape not in (forma_real, (token.nffts, token.nx, token.ny)):
                raise ExecutionError(f"Entrada R2C com forma {entrada.shape}, plano espera {forma_real}")
            if saida.shape != forma_complexa:
                raise ExecutionError(f"Saída R2C com forma {saida.shape}, plano espera {forma_complexa}")
            saida[...] = np.fft.rfft2(entrada[..., :token.ny], axes=(1, 2))
        return saida


BACKENDS = {'numpy': NumpyBackend}


def get_backend(nome='numpy'):
    """
    Instancia um backend pelo nome.

    Args:
        nome (str): Nome registrado em BACKENDS

    Returns:
        FftBackend: Instância do backend
    """
    try:
        return BACKENDS[nome]()
    except KeyError:
        raise PlanningError(f"Backend de FFT desconhecido: {nome!r}")
