"""
Módulo da troca entre workers (seção comm).

A troca é uma transposição all-to-all: na ida cada worker, dono de uma
partição do lote [nb × d1 × d3], envia a cada destino uma fatia radial; o
destino j fica com o lote inteiro restrito à sua fatia de d1. A volta
desfaz a transposição byte a byte.
"""

import numpy as np

from utils.erros import ExecutionError
from utils.logger import setup_logger
from utils.mensageria import Mensageria

logger = setup_logger('harness.comunicacao')


def comm_exchange(partitions, inverse=False, mensageria=None, executor=None):
    """
    Transposição all-to-all dos planos espectrais entre workers.

    Args:
        partitions (list): Blocos, um por worker. Na ida: [nb × d1 × d3];
            na volta: [lote × d1_j × d3]
        inverse (bool): True para desfazer a transposição
        mensageria (Mensageria): Caixas postais; criadas se omitidas
        executor (concurrent.futures.Executor): Executor dos workers; sem
            ele os workers rodam em sequência

    Returns:
        list: Blocos reparticionados, um por worker
    """
    workers = len(partitions)
    if workers <= 1:
        return list(partitions)

    mensageria = mensageria or Mensageria(workers)
    eixo_envio, eixo_montagem = (0, 1) if inverse else (1, 0)

    def enviar(origem):
        for destino, bloco in enumerate(np.array_split(partitions[origem], workers, axis=eixo_envio)):
            mensageria.publicar(origem, destino, bloco)

    def receber(destino):
        return np.concatenate(mensageria.consumir(destino, workers), axis=eixo_montagem)

    mapear = executor.map if executor is not None else map
    # Barreira: todas as publicações terminam antes do primeiro consumo
    list(mapear(enviar, range(workers)))
    recebidos = list(mapear(receber, range(workers)))

    if mensageria.pendentes():
        logger.error(f"{mensageria.pendentes()} mensagens não consumidas após a troca")
        raise ExecutionError("Troca entre workers deixou mensagens pendentes")
    return recebidos
