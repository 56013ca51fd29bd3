"""
Módulo de mensageria em processo para os workers do harness.

Este módulo implementa caixas postais por worker para a troca de blocos
entre partições (seção comm). Cada mensagem é serializada em bytes ao ser
publicada, de modo que o custo de cópia de uma troca real aparece na
medição. Um transporte entre processos pode substituir esta classe
mantendo publicar/consumir.
"""

import queue
import threading

import numpy as np

from utils.logger import setup_logger

logger = setup_logger('utils.mensageria')


class Mensagem:
    """Bloco serializado com origem, destino e metadados de forma."""

    __slots__ = ('origem', 'destino', 'dtype', 'shape', 'corpo')

    def __init__(self, origem, destino, bloco):
        bloco = np.ascontiguousarray(bloco)
        self.origem = origem
        self.destino = destino
        self.dtype = bloco.dtype.str
        self.shape = bloco.shape
        self.corpo = bloco.tobytes()

    def decodificar(self):
        """
        Reconstrói o bloco a partir dos bytes recebidos.

        Returns:
            numpy.ndarray: Cópia gravável do bloco original
        """
        return np.frombuffer(self.corpo, dtype=np.dtype(self.dtype)).reshape(self.shape).copy()


class Mensageria:
    """
    Caixas postais em processo, uma por worker.

    Os workers só se sincronizam nas barreiras de troca: cada um publica
    todos os seus blocos e depois consome exatamente um bloco de cada
    origem.
    """

    def __init__(self, workers):
        """
        Inicializa as caixas postais.

        Args:
            workers (int): Número de workers participantes
        """
        if workers < 1:
            raise ValueError(f"Número de workers inválido: {workers}")
        self.workers = workers
        self._caixas = [queue.Queue() for _ in range(workers)]
        self.bytes_enviados = 0
        self._trava_contador = threading.Lock()

    def publicar(self, origem, destino, bloco):
        """
        Publica um bloco na caixa postal do destino.

        Args:
            origem (int): Worker remetente
            destino (int): Worker destinatário
            bloco (numpy.ndarray): Dados a enviar
        """
        mensagem = Mensagem(origem, destino, bloco)
        with self._trava_contador:
            self.bytes_enviados += len(mensagem.corpo)
        self._caixas[destino].put(mensagem)

    def consumir(self, destino, esperadas):
        """
        Consome as mensagens pendentes de um worker, ordenadas pela origem.

        Args:
            destino (int): Worker que recebe
            esperadas (int): Quantidade de mensagens esperadas

        Returns:
            list: Blocos decodificados, indexados pela origem
        """
        recebidas = {}
        for _ in range(esperadas):
            mensagem = self._caixas[destino].get_nowait()
            if mensagem.origem in recebidas:
                logger.error(f"Mensagem duplicada de {mensagem.origem} para {destino}")
                raise RuntimeError(f"Mensagem duplicada de {mensagem.origem} para {destino}")
            recebidas[mensagem.origem] = mensagem.decodificar()
        return [recebidas[origem] for origem in sorted(recebidas)]

    def pendentes(self):
        """
        Retorna o número de mensagens ainda não consumidas.

        Returns:
            int: Total de mensagens em todas as caixas
        """
        return sum(caixa.qsize() for caixa in self._caixas)
