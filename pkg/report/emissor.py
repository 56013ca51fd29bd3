"""
Módulo de emissão de tabelas de relatório.

Este módulo implementa a classe EmissorTabelas, que gera a mesma tabela
em texto alinhado, dsv (valores separados por delimitador, com cabeçalho)
ou svg (gráfico de barras agrupadas, um grupo por entrada).
"""

import math
import os

from lxml import etree

from utils.erros import PreconditionError, SnapshotIOError
from utils.logger import setup_logger

logger = setup_logger('report.emissor')

FORMATOS = ('text', 'dsv', 'svg')
SVG_NS = 'http://www.w3.org/2000/svg'

# Geometria do gráfico, em pixels
LARGURA_BARRA = 18
ESPACO_BARRA = 4
ESPACO_GRUPO = 28
ALTURA_UTIL = 240
MARGEM = 40
CORES = ('#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd', '#8c564b', '#e377c2')


class EmissorTabelas:
    """
    Classe para geração de tabelas de relatório em vários formatos.

    As tabelas são DataFrames do pandas produzidos pelo módulo de análise
    ou por records_to_frame.
    """

    def __init__(self, separador=',', casas=2):
        """
        Inicializa o emissor.

        Args:
            separador (str): Separador do formato dsv
            casas (int): Casas decimais do formato texto
        """
        self.separador = separador
        self.casas = casas

    def gerar_texto(self, tabela):
        """
        Gera a tabela em texto com colunas alinhadas.

        Args:
            tabela (pandas.DataFrame): Tabela

        Returns:
            str: Texto da tabela, apenas o cabeçalho se vazia
        """
        if tabela.empty:
            return '  '.join(str(c) for c in tabela.columns) + '\n'
        casas = self.casas
        return tabela.to_string(index=False, na_rep='n/a',
                                float_format=lambda x: f"{x:.{casas}f}") + '\n'

    def gerar_dsv(self, tabela):
        """
        Gera a tabela como valores separados, com cabeçalho.

        Args:
            tabela (pandas.DataFrame): Tabela

        Returns:
            str: Conteúdo dsv
        """
        return tabela.to_csv(index=False, sep=self.separador, na_rep='n/a')

    def gerar_svg(self, tabela):
        """
        Gera um gráfico de barras agrupadas.

        Um grupo por entrada e uma barra por registro. A altura usa a coluna
        ratio quando existe, senão total. Valores n/a não geram barra.

        Args:
            tabela (pandas.DataFrame): Tabela

        Returns:
            str: Documento svg
        """
        coluna = 'ratio' if 'ratio' in tabela.columns else 'total'
        rotulo = 'key' if 'key' in tabela.columns else 'xpu_type'
        grupos = []
        if not tabela.empty:
            for entrada, linhas in tabela.groupby('input', sort=False):
                barras = [(str(reg[rotulo]), float(reg[coluna])) for _, reg in linhas.iterrows()
                          if not math.isnan(float(reg[coluna]))]
                grupos.append((entrada, barras))

        maximo = max((valor for _, barras in grupos for _, valor in barras), default=1.0) or 1.0
        largura = MARGEM * 2 + sum(
            len(barras) * (LARGURA_BARRA + ESPACO_BARRA) + ESPACO_GRUPO for _, barras in grupos
        )
        altura = ALTURA_UTIL + MARGEM * 2

        svg = etree.Element(f'{{{SVG_NS}}}svg', nsmap={None: SVG_NS},
                            width=str(largura), height=str(altura),
                            viewBox=f"0 0 {largura} {altura}")
        titulo = etree.SubElement(svg, f'{{{SVG_NS}}}title')
        titulo.text = f"{coluna} por entrada"

        base = MARGEM + ALTURA_UTIL
        x = MARGEM
        cores = {}
        for entrada, barras in grupos:
            grupo = etree.SubElement(svg, f'{{{SVG_NS}}}g', {'class': 'grupo', 'data-input': str(entrada)})
            inicio = x
            for nome, valor in barras:
                cor = cores.setdefault(nome, CORES[len(cores) % len(CORES)])
                h = ALTURA_UTIL * valor / maximo
                barra = etree.SubElement(grupo, f'{{{SVG_NS}}}rect', x=f"{x:.1f}", y=f"{base - h:.1f}",
                                         width=str(LARGURA_BARRA), height=f"{h:.1f}", fill=cor)
                dica = etree.SubElement(barra, f'{{{SVG_NS}}}title')
                dica.text = f"{entrada} {nome}: {valor:.3f}"
                x += LARGURA_BARRA + ESPACO_BARRA
            texto = etree.SubElement(grupo, f'{{{SVG_NS}}}text', x=f"{inicio:.1f}", y=str(base + 16))
            texto.text = str(entrada)
            x += ESPACO_GRUPO

        return etree.tostring(svg, pretty_print=True, xml_declaration=True, encoding='UTF-8').decode('utf-8')

    def gerar(self, tabela, formato):
        """Despacha para o gerador do formato pedido."""
        if formato not in FORMATOS:
            raise PreconditionError(f"Formato desconhecido: {formato!r} (use {', '.join(FORMATOS)})")
        return getattr(self, {'text': 'gerar_texto', 'dsv': 'gerar_dsv', 'svg': 'gerar_svg'}[formato])(tabela)


def emit(table, format='text', path=None, separador=','):
    """
    Emite uma tabela em texto, dsv ou svg.

    Args:
        table (pandas.DataFrame): Tabela a emitir
        format (str): text, dsv ou svg
        path (str): Arquivo de destino; sem ele só o conteúdo é retornado
        separador (str): Separador do formato dsv

    Returns:
        str: Conteúdo emitido

    Raises:
        SnapshotIOError: Se o arquivo não puder ser gravado
    """
    conteudo = EmissorTabelas(separador).gerar(table, format)
    if path is not None:
        try:
            diretorio = os.path.dirname(str(path))
            if diretorio:
                os.makedirs(diretorio, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(conteudo)
        except OSError as e:
            logger.error(f"Erro ao gravar tabela em {path}: {str(e)}")
            raise SnapshotIOError("Falha ao gravar tabela", path) from e
        logger.info(f"Tabela {format} gravada em {path}")
    return conteudo
