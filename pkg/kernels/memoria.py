"""
Módulo do kernel limitado por memória (seção mem).

Faz uma varredura de leitura e escrita de um buffer de bytes e devolve a
banda obtida. O valor depende do hardware; só a cópia é verificável.
"""

import time

import numpy as np

from utils.erros import PreconditionError

RESOLUCAO_NS = 1


class MemoryBuffers:
    """Par de buffers origem/destino pré-alocados."""

    def __init__(self, nbytes, seed=0):
        """
        Aloca os buffers.

        Args:
            nbytes (int): Capacidade em bytes
            seed (int): Semente do conteúdo de origem
        """
        if nbytes < 1:
            raise PreconditionError(f"Capacidade de buffer deve ser positiva, recebido {nbytes}")
        rng = np.random.default_rng([seed, 2])
        self.origem = rng.integers(0, 256, size=nbytes, dtype=np.uint8)
        self.destino = np.empty(nbytes, dtype=np.uint8)

    @property
    def capacidade(self):
        return self.origem.size


def mem_pass(buffers, nbytes):
    """
    Copia nbytes da origem para o destino e mede a banda.

    Args:
        buffers (MemoryBuffers): Buffers pré-alocados
        nbytes (int): Bytes a varrer

    Returns:
        float: Bytes movidos (leitura + escrita) por segundo

    Raises:
        PreconditionError: Se nbytes for zero, negativo ou maior que os buffers
    """
    if nbytes < 1:
        raise PreconditionError(f"Varredura de memória exige nbytes > 0, recebido {nbytes}")
    if nbytes > buffers.capacidade:
        raise PreconditionError(f"nbytes={nbytes} excede a capacidade de {buffers.capacidade}")

    inicio = time.perf_counter_ns()
    np.copyto(buffers.destino[:nbytes], buffers.origem[:nbytes])
    decorrido = max(time.perf_counter_ns() - inicio, RESOLUCAO_NS)
    return 2 * nbytes / (decorrido * 1e-9)
