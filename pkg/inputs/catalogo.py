"""
Módulo do catálogo de entradas de benchmark.

Este módulo contém as seis entradas CGYRO de referência, na ordem em que
são publicadas, e o leitor/escritor de arquivos CHAVE=VALOR no estilo dos
arquivos de entrada do CGYRO.
"""

import os

from inputs.grade import BenchmarkInput, CollisionKind, CollisionMode, GridShape
from utils.erros import InputFileError, PreconditionError
from utils.logger import setup_logger

logger = setup_logger('inputs.catalogo')

_CATALOGO = (
    BenchmarkInput('n102', GridShape(192, 24, 32, 16, 8, 2), CollisionMode.full(4)),
    BenchmarkInput('sh03s', GridShape(480, 32, 48, 24, 8, 3), CollisionMode.full(4)),
    BenchmarkInput('n103', GridShape(512, 32, 64, 24, 8, 3), CollisionMode.simplified()),
    BenchmarkInput('bg03n', GridShape(864, 24, 96, 18, 8, 2), CollisionMode.simplified()),
    BenchmarkInput('sh04n', GridShape(1152, 16, 128, 16, 8, 3), CollisionMode.simplified()),
    BenchmarkInput('bg04n', GridShape(1344, 16, 192, 16, 4, 2), CollisionMode.simplified()),
)

# Anotações de memória publicadas para as entradas Full, em GB
MEMORIA_PUBLICADA_GB = {'n102': 36, 'sh03s': 911}

CHAVES_OBRIGATORIAS = ('NAME', 'D1', 'D2', 'D3', 'D4', 'D5', 'D6', 'COLLISION')
CHAVES_OPCIONAIS = ('ENTRY_BYTES',)


def catalog():
    """
    Retorna as seis entradas de benchmark na ordem publicada.

    Returns:
        list: Lista de BenchmarkInput (n102, sh03s, n103, bg03n, sh04n, bg04n)
    """
    return list(_CATALOGO)


def catalog_names():
    return [entrada.name for entrada in _CATALOGO]


def load_input_file(caminho):
    """
    Carrega uma entrada de um arquivo CHAVE=VALOR.

    Linhas vazias e comentários iniciados por '#' são ignorados. Chaves
    desconhecidas ou repetidas são rejeitadas com o número da linha.

    Args:
        caminho (str): Caminho do arquivo

    Returns:
        BenchmarkInput: Entrada descrita pelo arquivo

    Raises:
        InputFileError: Se o arquivo estiver malformado ou incompleto
    """
    valores = {}
    try:
        with open(caminho, 'r', encoding='utf-8') as f:
            linhas = f.readlines()
    except OSError as e:
        raise InputFileError(f"Não foi possível ler o arquivo de entrada: {e}", caminho) from e

    for numero, linha in enumerate(linhas, start=1):
        linha = linha.split('#', 1)[0].strip()
        if not linha:
            continue
        if '=' not in linha:
            raise InputFileError(f"Linha sem '=': {linha!r}", caminho, numero)
        chave, valor = (parte.strip() for parte in linha.split('=', 1))
        chave = chave.upper()
        if chave not in CHAVES_OBRIGATORIAS + CHAVES_OPCIONAIS:
            raise InputFileError(f"Chave desconhecida: {chave}", caminho, numero)
        if chave in valores:
            raise InputFileError(f"Chave repetida: {chave}", caminho, numero)
        valores[chave] = (valor, numero)

    faltando = [chave for chave in CHAVES_OBRIGATORIAS if chave not in valores]
    if faltando:
        raise InputFileError(f"Chaves obrigatórias ausentes em {caminho}: {', '.join(faltando)}")

    def inteiro(chave):
        valor, numero = valores[chave]
        try:
            return int(valor)
        except ValueError:
            raise InputFileError(f"{chave} deve ser inteiro, recebido {valor!r}", caminho, numero)

    colisao, linha_colisao = valores['COLLISION']
    try:
        tipo = CollisionKind(colisao.upper())
    except ValueError:
        raise InputFileError(f"COLLISION deve ser FULL ou SIMPLIFIED, recebido {colisao!r}",
                             caminho, linha_colisao)

    try:
        entry_bytes = inteiro('ENTRY_BYTES') if 'ENTRY_BYTES' in valores else 8
        entrada = BenchmarkInput(
            name=valores['NAME'][0],
            grid=GridShape(*(inteiro(f'D{i}') for i in range(1, 7))),
            collision=CollisionMode(tipo, entry_bytes),
        )
    except PreconditionError as e:
        raise InputFileError(str(e), caminho) from e

    logger.info(f"Entrada {entrada.name} carregada de {caminho}")
    return entrada


def dump_input_file(entrada, caminho):
    """
    Grava uma entrada no formato CHAVE=VALOR.

    Args:
        entrada (BenchmarkInput): Entrada a gravar
        caminho (str): Caminho do arquivo de saída

    Returns:
        str: Caminho gravado
    """
    linhas = [f"NAME={entrada.name}"]
    linhas += [f"D{i}={d}" for i, d in enumerate(entrada.grid.dims(), start=1)]
    linhas.append(f"COLLISION={entrada.collision.kind.value}")
    linhas.append(f"ENTRY_BYTES={entrada.collision.entry_bytes}")
    with open(caminho, 'w', encoding='utf-8') as f:
        f.write('\n'.join(linhas) + '\n')
    return caminho


def find_input(nome_ou_caminho):
    """
    Resolve um nome do catálogo ou um caminho de arquivo de entrada.

    Args:
        nome_ou_caminho (str): Nome (ex.: 'n102') ou caminho de arquivo

    Returns:
        BenchmarkInput: Entrada encontrada

    Raises:
        PreconditionError: Se não for nome conhecido nem arquivo existente
    """
    for entrada in _CATALOGO:
        if entrada.name.lower() == str(nome_ou_caminho).lower():
            return entrada
    if os.path.isfile(nome_ou_caminho):
        return load_input_file(nome_ou_caminho)
    raise PreconditionError(
        f"Entrada desconhecida: {nome_ou_caminho!r}. Disponíveis: {', '.join(catalog_names())}"
    )
