"""
Módulo de ingestão e validação de arquivos de registros de tempo.

Este módulo implementa a classe ValidadorRegistros, que confere cada linha
de um arquivo (saída do harness ou dsv emitido) contra o esquema de
registros e acumula os erros com o número da linha, e a função ingest, que
transforma arquivos válidos em TimingRecord promediando os passos de
relatório de uma mesma execução.
"""

import csv
import json
import math

from harness.tempos import CAMPOS_REGISTRO, SECOES, SectionTiming
from inputs.catalogo import catalog_names
from report.registros import TimingRecord
from utils.erros import DataError, SnapshotIOError
from utils.logger import setup_logger

logger = setup_logger('report.ingestao')

AUSENTES = ('', 'n/a')


class ValidadorRegistros:
    """
    Classe para validação de arquivos de registros de tempo.

    Esta classe confere o cabeçalho e cada linha de um arquivo, guardando
    os erros encontrados e os registros válidos com suas linhas de origem.
    """

    def __init__(self, separador=','):
        """
        Inicializa o validador.

        Args:
            separador (str): Separador de campos do arquivo
        """
        self.separador = separador
        self.erros = []
        self.registros = []

    def validar_arquivo(self, caminho):
        """
        Valida um arquivo inteiro.

        Args:
            caminho (str): Caminho do arquivo

        Returns:
            bool: True se o arquivo não tem erros

        Raises:
            SnapshotIOError: Se o arquivo não puder ser lido
        """
        self.erros = []
        self.registros = []
        try:
            with open(caminho, 'r', encoding='utf-8', newline='') as f:
                leitor = csv.reader(f, delimiter=self.separador)
                cabecalho = next(leitor, None)
                if cabecalho is None:
                    self.erros.append((caminho, 1, "Arquivo vazio, cabeçalho ausente"))
                    return False
                if tuple(c.strip() for c in cabecalho) != CAMPOS_REGISTRO:
                    self.erros.append((caminho, 1, f"Cabeçalho inválido, esperado {','.join(CAMPOS_REGISTRO)}"))
                    return False
                for linha in leitor:
                    if not any(campo.strip() for campo in linha):
                        continue
                    self._validar_linha(caminho, leitor.line_num, linha)
        except OSError as e:
            logger.error(f"Erro ao ler registros de {caminho}: {str(e)}")
            raise SnapshotIOError("Falha ao ler arquivo de registros", caminho) from e

        return len(self.erros) == 0

    def _validar_linha(self, caminho, numero, linha):
        """
        Converte uma linha em TimingRecord, registrando os erros.

        Args:
            caminho (str): Arquivo de origem
            numero (int): Número da linha no arquivo
            linha (list): Campos da linha
        """
        if len(linha) != len(CAMPOS_REGISTRO):
            self.erros.append((caminho, numero, f"Esperados {len(CAMPOS_REGISTRO)} campos, encontrados {len(linha)}"))
            return
        valores = dict(zip(CAMPOS_REGISTRO, (campo.strip() for campo in linha)))

        try:
            tempos = {}
            for secao in SECOES:
                tempos[secao] = float(valores[secao])
                if not math.isfinite(tempos[secao]) or tempos[secao] < 0:
                    raise ValueError(f"Tempo da seção {secao} inválido: {valores[secao]}")
            n_xpu = int(valores['n_xpu'])
            n_nodes = int(valores['n_nodes'])
            passos = None if valores['steps_per_report'] in AUSENTES else int(valores['steps_per_report'])
            semente = None if valores['seed'] in AUSENTES else int(valores['seed'])
        except ValueError as e:
            self.erros.append((caminho, numero, str(e)))
            return

        if not valores['system'] or not valores['xpu_type']:
            self.erros.append((caminho, numero, "Campos system e xpu_type são obrigatórios"))
            return
        if not (n_xpu >= n_nodes >= 1):
            self.erros.append((caminho, numero, f"Exige n_xpu >= n_nodes >= 1 (n_xpu={n_xpu}, n_nodes={n_nodes})"))
            return
        if valores['input'] not in catalog_names():
            self.erros.append((caminho, numero, f"Entrada fora do catálogo: {valores['input']!r}"))
            return
        if passos is not None and passos < 1:
            self.erros.append((caminho, numero, f"steps_per_report deve ser >= 1: {passos}"))
            return

        registro = TimingRecord(valores['system'], valores['xpu_type'], n_xpu, n_nodes, valores['input'],
                                SectionTiming(**tempos), passos, semente)
        self.registros.append((numero, registro))

    def gerar_relatorio(self):
        """
        Gera um relatório de validação.

        Returns:
            dict: Relatório de validação
        """
        return {
            'valido': len(self.erros) == 0,
            'total_registros': len(self.registros),
            'total_erros': len(self.erros),
            'erros': [f"{caminho}:{linha}: {mensagem}" for caminho, linha, mensagem in self.erros],
        }

    def salvar_relatorio(self, arquivo):
        """
        Salva o relatório de validação em um arquivo JSON.

        Args:
            arquivo (str): Caminho para o arquivo de saída

        Returns:
            bool: True se o salvamento foi bem-sucedido
        """
        try:
            with open(arquivo, 'w', encoding='utf-8') as f:
                json.dump(self.gerar_relatorio(), f, ensure_ascii=False, indent=2)
            logger.info(f"Relatório de validação salvo em {arquivo}")
            return True
        except OSError as e:
            logger.error(f"Erro ao salvar relatório de validação: {str(e)}")
            return False


def average_records(records):
    """
    Promedia registros de uma mesma execução, seção a seção.

    Registros com os mesmos system, xpu_type, n_xpu, n_nodes, input,
    steps_per_report e seed formam um grupo; a ordem de primeira aparição
    é preservada.

    Args:
        records (list): Lista de TimingRecord

    Returns:
        list: Um TimingRecord por grupo
    """
    grupos = {}
    for registro in records:
        grupos.setdefault(registro.identity(), []).append(registro)

    resultado = []
    for membros in grupos.values():
        if len(membros) == 1:
            resultado.append(membros[0])
            continue
        medias = {
            secao: math.fsum(getattr(r.sections, secao) for r in membros) / len(membros)
            for secao in SECOES
        }
        base = membros[0]
        resultado.append(TimingRecord(base.system, base.xpu_type, base.n_xpu, base.n_nodes, base.input,
                                      SectionTiming(**medias), base.steps_per_report, base.seed))
    return resultado


def ingest(paths, average=True):
    """
    Lê arquivos de registros de tempo.

    Args:
        paths (list): Caminhos dos arquivos (saída do harness ou dsv)
        average (bool): Promediar os passos de relatório de cada execução

    Returns:
        list: Lista de TimingRecord

    Raises:
        DataError: Na primeira linha malformada, com arquivo e número da linha
    """
    if isinstance(paths, (str, bytes)) or hasattr(paths, '__fspath__'):
        paths = [paths]

    registros = []
    for caminho in paths:
        validador = ValidadorRegistros()
        if not validador.validar_arquivo(caminho):
            for arquivo, linha, mensagem in validador.erros:
                logger.error(f"{arquivo}:{linha}: {mensagem}")
            arquivo, linha, mensagem = validador.erros[0]
            raise DataError(mensagem, arquivo, linha)
        registros.extend(registro for _, registro in validador.registros)
        logger.info(f"{len(validador.registros)} registros lidos de {caminho}")

    return average_records(registros) if average else registros
