"""
Módulo de análise de desempenho relativo.

Reproduz a metodologia de comparação: soma dos tempos de um conjunto de
seções, taxa 1/(tempo·divisor) com o divisor dado pela normalização e
razão contra o registro de referência (baseline).
"""

import enum
import math
from dataclasses import dataclass

import pandas as pd

from harness.tempos import SECOES
from inputs.catalogo import catalog_names
from utils.erros import PreconditionError, ReportError
from utils.logger import setup_logger

logger = setup_logger('report.analise')

COLUNAS_RELATIVAS = ('input', 'system', 'xpu_type', 'key', 'n_xpu', 'n_nodes', 'total', 'ratio',
                     'sections', 'norm', 'baseline')


class Normalization(enum.Enum):
    """Divisor aplicado à taxa de cada registro."""

    RAW = 'raw'
    PER_NODE = 'per_node'
    PER_XPU = 'per_xpu'

    def divisor(self, registro):
        if self is Normalization.PER_NODE:
            return registro.n_nodes
        if self is Normalization.PER_XPU:
            return registro.n_xpu
        return 1

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        try:
            return cls(str(valor).strip().lower())
        except ValueError:
            raise PreconditionError(f"Normalização desconhecida: {valor!r} (use raw, per_node ou per_xpu)")


@dataclass(frozen=True)
class SectionSet:
    """Subconjunto nomeado das oito seções."""

    name: str
    members: tuple

    def __post_init__(self):
        membros = tuple(self.members)
        if not membros:
            raise PreconditionError(f"Conjunto de seções {self.name!r} vazio")
        desconhecidas = [m for m in membros if m not in SECOES]
        if desconhecidas:
            raise PreconditionError(f"Seções desconhecidas em {self.name!r}: {', '.join(desconhecidas)}")
        # Ordem canônica, sem repetição
        object.__setattr__(self, 'members', tuple(s for s in SECOES if s in membros))

    def __str__(self):
        return self.name


def builtin_sets(memoria=('mem',)):
    """
    Conjuntos de seções das quatro comparações publicadas.

    Args:
        memoria (iterable): Membros do conjunto 'memory'

    Returns:
        dict: nome → SectionSet (nl, maintained, memory, all)
    """
    return {
        'nl': SectionSet('nl', ('nl',)),
        'maintained': SectionSet('maintained', ('coll', 'str', 'field', 'shear', 'mem')),
        'memory': SectionSet('memory', tuple(memoria)),
        'all': SectionSet('all', SECOES),
    }


def parse_section_set(texto, memoria=('mem',)):
    """
    Resolve um nome embutido ou uma lista de seções separada por vírgulas.

    Args:
        texto (str | SectionSet): 'nl', 'all', 'coll,str', ...
        memoria (iterable): Membros do conjunto 'memory'

    Returns:
        SectionSet: Conjunto resolvido
    """
    if isinstance(texto, SectionSet):
        return texto
    texto = str(texto).strip()
    embutidos = builtin_sets(memoria)
    if texto in embutidos:
        return embutidos[texto]
    return SectionSet(texto, tuple(parte.strip() for parte in texto.split(',') if parte.strip()))


def total_time(registro, secoes):
    """
    Soma os tempos das seções do conjunto.

    Args:
        registro (TimingRecord): Registro
        secoes (SectionSet): Conjunto de seções

    Returns:
        float: Segundos
    """
    return registro.sections.total(secoes.members)


def _corresponde(registro, baseline):
    alvo = ' '.join(str(baseline).lower().split())
    return alvo in (registro.key, registro.xpu_type.lower(), registro.system.lower())


def find_baseline(records, baseline):
    """
    Localiza o registro de referência por chave, tipo de XPU ou sistema.

    Raises:
        ReportError: Se nenhum ou mais de um registro corresponder
    """
    candidatos = [r for r in records if _corresponde(r, baseline)]
    if not candidatos:
        raise ReportError(f"Baseline {baseline!r} ausente para a entrada {records[0].input}")
    if len(candidatos) > 1:
        raise ReportError(f"Baseline {baseline!r} ambígua: {len(candidatos)} registros correspondem")
    return candidatos[0]


def _taxa(registro, secoes, norm):
    total = total_time(registro, secoes)
    if total <= 0:
        return math.nan
    return 1.0 / (total * norm.divisor(registro))


def relative_performance(records, input=None, sections='nl', baseline='a100-80g', norm='per_xpu'):
    """
    Desempenho relativo de cada registro de uma entrada contra a baseline.

    rate(r) = 1 / (total(r) · divisor), com divisor 1, n_nodes ou n_xpu;
    ratio(r) = rate(r) / rate(baseline). Conjuntos que somam zero ficam
    como n/a (NaN).

    Args:
        records (list): Registros de tempo
        input (str): Entrada a comparar; sem ela, todos devem compartilhar
            a mesma entrada
        sections (str | SectionSet): Conjunto de seções
        baseline (str): Chave, tipo de XPU ou sistema da referência
        norm (str | Normalization): raw, per_node ou per_xpu

    Returns:
        pandas.DataFrame: Uma linha por registro (colunas COLUNAS_RELATIVAS)

    Raises:
        ReportError: Se faltar a baseline, não houver registros ou as
            entradas estiverem misturadas
    """
    secoes = parse_section_set(sections)
    norm = Normalization.parse(norm)

    if input is not None:
        records = [r for r in records if r.input == input]
    if not records:
        raise ReportError(f"Nenhum registro para a entrada {input!r}")
    entradas = sorted({r.input for r in records})
    if len(entradas) > 1:
        logger.error(f"Comparação com entradas misturadas: {entradas}")
        raise ReportError(f"Registros de entradas diferentes: {', '.join(entradas)}")

    referencia = find_baseline(records, baseline)
    taxa_referencia = _taxa(referencia, secoes, norm)
    if math.isnan(taxa_referencia):
        logger.warning(f"Baseline {baseline!r} soma zero em {secoes.name}; razões marcadas n/a")

    linhas = []
    for registro in records:
        linhas.append({
            'input': registro.input,
            'system': registro.system,
            'xpu_type': registro.xpu_type,
            'key': registro.key,
            'n_xpu': registro.n_xpu,
            'n_nodes': registro.n_nodes,
            'total': total_time(registro, secoes),
            'ratio': _taxa(registro, secoes, norm) / taxa_referencia,
            'sections': secoes.name,
            'norm': norm.value,
            'baseline': referencia.key,
        })
    return pd.DataFrame(linhas, columns=list(COLUNAS_RELATIVAS))


def figure_table(records, sections='nl', baseline='a100-80g', norm='per_xpu'):
    """
    Tabela de desempenho relativo sobre todas as entradas, na ordem do catálogo.

    Entradas sem a baseline são omitidas com aviso.

    Returns:
        pandas.DataFrame: Tabelas de relative_performance concatenadas

    Raises:
        ReportError: Se nenhuma entrada puder ser comparada
    """
    tabelas = []
    for nome in catalog_names():
        da_entrada = [r for r in records if r.input == nome]
        if not da_entrada:
            continue
        try:
            tabelas.append(relative_performance(da_entrada, nome, sections, baseline, norm))
        except ReportError as e:
            logger.warning(f"Entrada {nome} omitida: {str(e)}")
    if not tabelas:
        raise ReportError(f"Nenhuma entrada com a baseline {baseline!r}")
    return pd.concat(tabelas, ignore_index=True)


def section_breakdown(records, input):
    """
    Tempos absolutos por seção de cada sistema em uma entrada.

    Args:
        records (list): Registros de tempo
        input (str): Entrada

    Returns:
        pandas.DataFrame: Uma linha por registro, colunas das oito seções e total
    """
    da_entrada = [r for r in records if r.input == input]
    if not da_entrada:
        raise ReportError(f"Nenhum registro para a entrada {input!r}")
    linhas = []
    for registro in da_entrada:
        linha = {
            'input': registro.input,
            'system': registro.system,
            'xpu_type': registro.xpu_type,
            'key': registro.key,
            'n_xpu': registro.n_xpu,
            'n_nodes': registro.n_nodes,
        }
        linha.update(registro.sections.as_dict())
        linha['total'] = registro.sections.total()
        linhas.append(linha)
    return pd.DataFrame(linhas)
