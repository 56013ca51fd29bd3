"""
Pacote do harness de execução da bancada CGYRO.

Este pacote conduz o laço de passos de relatório, cronometra as oito
seções, troca dados entre workers, grava snapshots e registros de tempo.
"""

from harness.comunicacao import comm_exchange
from harness.execucao import Orquestrador, RunConfig, RunResult, run
from harness.snapshot import io_snapshot, read_snapshot
from harness.tempos import (CAMPOS_REGISTRO, SECOES, Cronometro, GravadorTempos,
                            SectionTiming)

__version__ = '1.0.0'

__all__ = [
    'CAMPOS_REGISTRO', 'Cronometro', 'GravadorTempos', 'Orquestrador',
    'RunConfig', 'RunResult', 'SECOES', 'SectionTiming', 'comm_exchange',
    'io_snapshot', 'read_snapshot', 'run',
]
