"""
Módulo de execução do laço de passos de relatório.

O Orquestrador materializa o estado e os operadores de uma entrada
reduzida, percorre reports × steps_per_report passos rodando cada seção
cronometrada e grava um registro de tempo por passo de relatório.

Ordem das seções em cada passo: nl, coll, str, field, shear, mem, comm.
A seção io roda uma vez ao fim de cada passo de relatório.
"""

import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from fftplan.especificacao import BackendSemantics
from harness.comunicacao import comm_exchange
from harness.snapshot import io_snapshot
from harness.tempos import Cronometro, GravadorTempos
from kernels.colisao import build_collision_operator, coll_step
from kernels.estado import build_state, checksum, split_batch
from kernels.memoria import MemoryBuffers, mem_pass
from kernels.nl import build_nl_plans, poisson_bracket
from kernels.secoes import field_step, shear_step, str_step, velocity_weights
from utils.config import GIB
from utils.erros import PreconditionError
from utils.logger import setup_logger
from utils.mensageria import Mensageria

logger = setup_logger('harness.execucao')


@dataclass(frozen=True)
class RunConfig:
    """
    Parâmetros de uma execução do harness.

    Os campos além dos sete básicos vêm de utils.config no uso pela CLI.
    """

    input: object
    steps_per_report: int = 10
    reports: int = 1
    semantics: BackendSemantics = field(default_factory=BackendSemantics.natural)
    workers: int = 1
    out_path: str = None
    seed: int = 0
    dt: float = 1e-3
    memory_budget: int = GIB
    mem_bytes: int = 0
    str_shift: int = 1
    system: str = 'local'
    xpu_type: str = 'CPU numpy'
    snapshot_path: str = None
    progress: bool = False
    backend: object = None

    def __post_init__(self):
        if self.steps_per_report < 1:
            raise PreconditionError(f"steps_per_report deve ser >= 1, recebido {self.steps_per_report}")
        if self.reports < 1:
            raise PreconditionError(f"reports deve ser >= 1, recebido {self.reports}")
        if self.workers < 1:
            raise PreconditionError(f"workers deve ser >= 1, recebido {self.workers}")
        lote = self.input.grid.batch()
        if lote % self.workers:
            raise PreconditionError(f"{self.workers} workers não dividem o lote de {lote} FFTs")
        if self.mem_bytes < 0:
            raise PreconditionError(f"mem_bytes não pode ser negativo: {self.mem_bytes}")

    def metadata(self):
        """Campos de identificação gravados em cada registro de tempo."""
        return {
            'system': self.system,
            'xpu_type': self.xpu_type,
            'n_xpu': self.workers,
            'n_nodes': 1,
            'input': self.input.name,
            'steps_per_report': self.steps_per_report,
            'seed': self.seed,
        }


@dataclass(frozen=True)
class RunResult:
    """Tempos por passo de relatório, paredes medidas e checksum final."""

    timings: list
    wall_times: list
    checksum: float
    final_state: object = None


class Orquestrador:
    """
    Classe que conduz o laço de passos de uma execução.

    Os workers recebem partições disjuntas do lote e só se sincronizam nas
    barreiras da troca; toda a cronometragem é feita aqui.
    """

    def __init__(self, config):
        """
        Prepara estado, planos, operador de colisão e buffers.

        Args:
            config (RunConfig): Parâmetros da execução

        Raises:
            MemoryBudgetError: Se as constantes de colisão excederem o orçamento
        """
        self.config = config
        entrada = config.input
        grid = entrada.grid
        self.grid = grid

        logger.info(f"Preparando {entrada.name} {grid} com {config.workers} worker(s), "
                    f"semântica {config.semantics.name}")
        self.operador = build_collision_operator(grid, entrada.collision, config.seed, config.memory_budget)
        self.estado = build_state(grid, config.seed)
        self.planos = build_nl_plans(grid, config.semantics, config.backend,
                                     nffts=grid.batch() // config.workers)
        self.G_particoes = split_batch(self.estado.G, config.workers)
        self.pesos = velocity_weights(grid)
        self.bytes_mem = config.mem_bytes or self.estado.F.nbytes
        self.buffers = MemoryBuffers(self.bytes_mem, config.seed)
        self.mensageria = Mensageria(config.workers)
        self.passo_global = 0

        self.gravador = GravadorTempos(config.out_path) if config.out_path else None
        if config.snapshot_path:
            self.caminho_snapshot = config.snapshot_path
        elif config.out_path:
            self.caminho_snapshot = os.path.splitext(str(config.out_path))[0] + '.gbnc'
        else:
            self.caminho_snapshot = os.devnull

    def _nl(self, executor):
        particoes = split_batch(self.estado.F, self.config.workers)
        colchetes = executor.map(
            lambda i: poisson_bracket(particoes[i], self.G_particoes[i], self.planos),
            range(self.config.workers),
        )
        F = self.estado.F + self.config.dt * np.concatenate(list(colchetes), axis=0)
        self.estado = self.estado.with_fields(F=F)

    def _coll(self):
        self.estado = self.estado.with_fields(v=coll_step(self.estado, self.operador))

    def _str(self):
        self.estado = self.estado.with_fields(F=str_step(self.estado, self.config.str_shift))

    def _field(self):
        _, F = field_step(self.estado, self.pesos)
        self.estado = self.estado.with_fields(F=F)

    def _shear(self):
        sentido = 1 if self.passo_global % 2 == 0 else -1
        self.estado = self.estado.with_fields(F=shear_step(self.estado, sentido))

    def _comm(self, executor):
        particoes = split_batch(self.estado.F, self.config.workers)
        transpostas = comm_exchange(particoes, mensageria=self.mensageria, executor=executor)
        de_volta = comm_exchange(transpostas, inverse=True, mensageria=self.mensageria, executor=executor)
        self.estado = self.estado.with_fields(F=np.concatenate(de_volta, axis=0))

    def executar_passo(self, cronometro, executor):
        """Roda um passo de tempo completo acumulando no cronômetro."""
        cronometro.medir('nl', self._nl, executor)
        cronometro.medir('coll', self._coll)
        cronometro.medir('str', self._str)
        cronometro.medir('field', self._field)
        cronometro.medir('shear', self._shear)
        cronometro.medir('mem', mem_pass, self.buffers, self.bytes_mem)
        cronometro.medir('comm', self._comm, executor)
        self.passo_global += 1

    def executar(self):
        """
        Executa todos os passos de relatório.

        Returns:
            RunResult: Tempos, paredes e checksum final
        """
        config = self.config
        tempos, paredes = [], []
        relatorios = tqdm(range(config.reports), desc=config.input.name, unit='relatório',
                          disable=not config.progress, file=sys.stderr)

        if self.gravador:
            self.gravador.iniciar()

        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            for indice in relatorios:
                cronometro = Cronometro()
                inicio = time.perf_counter()
                for _ in range(config.steps_per_report):
                    self.executar_passo(cronometro, executor)
                cronometro.medir('io', io_snapshot, self.estado, self.caminho_snapshot)
                paredes.append(time.perf_counter() - inicio)

                tempo = cronometro.fechar()
                tempos.append(tempo)
                logger.info(f"Relatório {indice + 1}/{config.reports}: total {tempo.total():.6f} s")
                if self.gravador:
                    self.gravador.anexar(config.metadata(), tempo)

        soma = checksum(self.estado)
        logger.info(f"Execução de {config.input.name} concluída, checksum {soma!r}")
        return RunResult(tempos, paredes, soma, self.estado)


def run(config):
    """
    Executa o benchmark descrito por config.

    Args:
        config (RunConfig): Parâmetros da execução

    Returns:
        RunResult: Lista de SectionTiming por passo de relatório e checksum
    """
    return Orquestrador(config).executar()
