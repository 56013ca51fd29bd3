"""
Módulo dos tempos por seção e da gravação dos registros de tempo.

Cada passo de relatório produz um SectionTiming; o GravadorTempos recria
o arquivo de saída a cada execução e grava uma linha por passo de relatório,
no mesmo esquema lido pelo pacote report.
"""

import csv
import math
import os
import time
from dataclasses import astuple, dataclass, fields

from utils.erros import PreconditionError, SnapshotIOError
from utils.logger import setup_logger

logger = setup_logger('harness.tempos')

SECOES = ('nl', 'coll', 'str', 'field', 'shear', 'mem', 'io', 'comm')

CAMPOS_REGISTRO = (
    'system', 'xpu_type', 'n_xpu', 'n_nodes', 'input',
) + SECOES + ('steps_per_report', 'seed')

RESOLUCAO_TIMER = time.get_clock_info('perf_counter').resolution


@dataclass(frozen=True)
class SectionTiming:
    """Segundos gastos em cada seção durante um passo de relatório."""

    nl: float = 0.0
    coll: float = 0.0
    str: float = 0.0
    field: float = 0.0
    shear: float = 0.0
    mem: float = 0.0
    io: float = 0.0
    comm: float = 0.0

    def __post_init__(self):
        for campo in fields(self):
            valor = getattr(self, campo.name)
            if not math.isfinite(valor) or valor < 0:
                raise PreconditionError(f"Tempo da seção {campo.name} inválido: {valor}")

    @classmethod
    def from_mapping(cls, valores):
        """Cria a partir de um dicionário seção → segundos."""
        return cls(**{secao: float(valores.get(secao, 0.0)) for secao in SECOES})

    def as_dict(self):
        return dict(zip(SECOES, astuple(self)))

    def total(self, secoes=SECOES):
        """
        Soma os tempos das seções pedidas.

        Args:
            secoes (iterable): Nomes das seções; todas por padrão

        Returns:
            float: Soma em segundos
        """
        return math.fsum(getattr(self, secao) for secao in secoes)


class Cronometro:
    """Acumula o tempo de cada seção em um passo de relatório."""

    def __init__(self):
        self.acumulado = dict.fromkeys(SECOES, 0.0)

    def medir(self, secao, funcao, *args, **kwargs):
        """
        Executa funcao e soma o tempo decorrido à seção.

        Returns:
            Valor retornado por funcao
        """
        inicio = time.perf_counter()
        resultado = funcao(*args, **kwargs)
        self.acumulado[secao] += time.perf_counter() - inicio
        return resultado

    def fechar(self):
        """
        Produz o SectionTiming do passo de relatório.

        Seções abaixo da resolução do relógio são registradas como 0.0.

        Returns:
            SectionTiming: Tempos do passo
        """
        valores = {
            secao: (0.0 if segundos < RESOLUCAO_TIMER else segundos)
            for secao, segundos in self.acumulado.items()
        }
        return SectionTiming(**valores)


class GravadorTempos:
    """
    Grava registros de tempo em CSV, uma linha por passo de relatório.

    Cada gravador começa o arquivo do zero: iniciar() trunca e escreve o
    cabeçalho; anexar() acrescenta apenas as linhas da execução corrente.
    """

    def __init__(self, arquivo_saida, separador=','):
        """
        Inicializa o gravador.

        Args:
            arquivo_saida (str): Caminho do arquivo de tempos
            separador (str): Separador de campos
        """
        self.arquivo_saida = str(arquivo_saida)
        self.separador = separador
        self.iniciado = False

    def _abrir(self, modo):
        diretorio = os.path.dirname(self.arquivo_saida)
        if diretorio:
            os.makedirs(diretorio, exist_ok=True)
        return open(self.arquivo_saida, modo, encoding='utf-8', newline='')

    def _escritor(self, f):
        return csv.DictWriter(f, fieldnames=CAMPOS_REGISTRO, delimiter=self.separador)

    def iniciar(self):
        """Trunca o arquivo e escreve o cabeçalho."""
        try:
            with self._abrir('w') as f:
                self._escritor(f).writeheader()
        except OSError as e:
            logger.error(f"Erro ao iniciar o arquivo de tempos {self.arquivo_saida}: {str(e)}")
            raise SnapshotIOError("Falha ao criar arquivo de tempos", self.arquivo_saida) from e
        self.iniciado = True

    def anexar(self, metadados, tempos):
        """
        Anexa um registro ao arquivo, iniciando-o na primeira chamada.

        Args:
            metadados (dict): system, xpu_type, n_xpu, n_nodes, input,
                steps_per_report e seed
            tempos (SectionTiming): Tempos do passo de relatório
        """
        if not self.iniciado:
            self.iniciar()
        linha = dict(metadados)
        linha.update({secao: f"{segundos:.6f}" for secao, segundos in tempos.as_dict().items()})
        try:
            with self._abrir('a') as f:
                self._escritor(f).writerow(linha)
        except OSError as e:
            logger.error(f"Erro ao gravar registro de tempo em {self.arquivo_saida}: {str(e)}")
            raise SnapshotIOError("Falha ao gravar registro de tempo", self.arquivo_saida) from e
