"""
Módulo dos registros de tempo e do conjunto de dados embutido.

Um TimingRecord é uma observação sistema × entrada: quantidade de XPUs e
nós, tipo de XPU e os tempos das oito seções por passo de relatório.
"""

import os
import re
from dataclasses import dataclass

import pandas as pd

from harness.tempos import CAMPOS_REGISTRO, SECOES, SectionTiming
from inputs.catalogo import catalog_names
from utils.erros import PreconditionError

ARQUIVO_EMBUTIDO = os.path.join(os.path.dirname(__file__), 'dados', 'tempos_referencia.csv')

# Chaves curtas dos tipos de XPU avaliados
APELIDOS_XPU = {
    'intel max 9480 cpu': 'max9480',
    'intel max 1550 gpu': 'max1550',
    'amd mi250x gpu': 'mi250x',
    'nvidia a100 80g gpu': 'a100-80g',
    'nvidia a100 40g gpu': 'a100-40g',
}


def record_key(xpu_type):
    """
    Chave curta de um tipo de XPU.

    Tipos fora da tabela de apelidos viram um slug em minúsculas.

    Args:
        xpu_type (str): Tipo de XPU, ex. 'NVIDIA A100 80G GPU'

    Returns:
        str: Chave, ex. 'a100-80g'
    """
    normalizado = ' '.join(str(xpu_type).lower().split())
    if normalizado in APELIDOS_XPU:
        return APELIDOS_XPU[normalizado]
    return re.sub(r'[^a-z0-9]+', '-', normalizado).strip('-')


@dataclass(frozen=True)
class TimingRecord:
    """Observação de tempo de uma entrada em um sistema."""

    system: str
    xpu_type: str
    n_xpu: int
    n_nodes: int
    input: str
    sections: SectionTiming
    steps_per_report: int = None
    seed: int = None

    def __post_init__(self):
        if not (self.n_xpu >= self.n_nodes >= 1):
            raise PreconditionError(
                f"Exige n_xpu >= n_nodes >= 1, recebido n_xpu={self.n_xpu}, n_nodes={self.n_nodes}"
            )
        if self.input not in catalog_names():
            raise PreconditionError(f"Entrada fora do catálogo: {self.input!r}")

    @property
    def key(self):
        return record_key(self.xpu_type)

    def identity(self):
        """Campos que identificam execuções a serem promediadas juntas."""
        return (self.system, self.xpu_type, self.n_xpu, self.n_nodes, self.input,
                self.steps_per_report, self.seed)

    def as_row(self):
        linha = {
            'system': self.system,
            'xpu_type': self.xpu_type,
            'n_xpu': self.n_xpu,
            'n_nodes': self.n_nodes,
            'input': self.input,
            'steps_per_report': self.steps_per_report,
            'seed': self.seed,
        }
        linha.update(self.sections.as_dict())
        return linha


def records_to_frame(records):
    """
    Converte registros em um DataFrame no esquema dos registros de tempo.

    Args:
        records (list): Lista de TimingRecord

    Returns:
        pandas.DataFrame: Uma linha por registro, colunas em CAMPOS_REGISTRO
    """
    quadro = pd.DataFrame([r.as_row() for r in records], columns=list(CAMPOS_REGISTRO))
    # Inteiros opcionais ficam como objeto para não virarem float com NaN
    for coluna in ('steps_per_report', 'seed'):
        quadro[coluna] = quadro[coluna].astype(object)
    for secao in SECOES:
        quadro[secao] = quadro[secao].astype(float)
    return quadro


def bundled_dataset():
    """
    Retorna os 28 registros publicados, na ordem das tabelas.

    Returns:
        list: Lista de TimingRecord
    """
    from report.ingestao import ingest

    return ingest([ARQUIVO_EMBUTIDO])
