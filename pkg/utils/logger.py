"""
Módulo de logging da bancada CGYRO.

Este módulo implementa funções para configurar e utilizar o sistema de
logging em todos os pacotes (catálogo, planos de FFT, kernels, harness e
relatórios).
"""

import logging
import os
from logging.handlers import RotatingFileHandler

FORMATO = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FORMATO_DATA = '%Y-%m-%d %H:%M:%S'

# Loggers criados por setup_logger, para ajuste de nível em bloco
_registrados = {}


def _nivel_numerico(nivel):
    if isinstance(nivel, int):
        return nivel
    return getattr(logging, str(nivel).upper(), logging.INFO)


def setup_logger(nome, nivel=None, arquivo_log=None, max_bytes=10485760, backup_count=5):
    """
    Configura e retorna um logger.

    O nível não é lido de variáveis de ambiente: vem do argumento ou,
    depois, de definir_nivel() chamado pela CLI a partir da configuração.

    Args:
        nome (str): Nome do logger (ex.: 'harness.execucao')
        nivel (str): Nível de logging (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        arquivo_log (str): Caminho para o arquivo de log
        max_bytes (int): Tamanho máximo do arquivo de log antes de rotacionar
        backup_count (int): Número de arquivos de backup a manter

    Returns:
        logging.Logger: Logger configurado
    """
    logger = logging.getLogger(nome)
    _registrados[nome] = logger

    if logger.handlers:
        if nivel:
            logger.setLevel(_nivel_numerico(nivel))
        return logger

    logger.setLevel(_nivel_numerico(nivel or 'WARNING'))
    logger.propagate = False

    formatter = logging.Formatter(FORMATO, datefmt=FORMATO_DATA)

    # stdout fica reservado para a saída dos comandos
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if arquivo_log:
        adicionar_arquivo(logger, arquivo_log, max_bytes, backup_count)

    return logger


def adicionar_arquivo(logger, arquivo_log, max_bytes=10485760, backup_count=5):
    """
    Acrescenta um handler de arquivo com rotação a um logger existente.

    Args:
        logger (logging.Logger): Logger alvo
        arquivo_log (str): Caminho para o arquivo de log
        max_bytes (int): Tamanho máximo antes de rotacionar
        backup_count (int): Número de arquivos de backup

    Returns:
        bool: True se o handler foi adicionado
    """
    try:
        diretorio = os.path.dirname(arquivo_log)
        if diretorio:
            os.makedirs(diretorio, exist_ok=True)

        file_handler = RotatingFileHandler(
            arquivo_log,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(logging.Formatter(FORMATO, datefmt=FORMATO_DATA))
        logger.addHandler(file_handler)
        return True
    except OSError as e:
        logger.warning(f"Não foi possível configurar o log em arquivo: {str(e)}")
        return False


def definir_nivel(nivel, arquivo_log=None):
    """
    Ajusta o nível (e opcionalmente o arquivo) de todos os loggers do projeto.

    Args:
        nivel (str): Novo nível de logging
        arquivo_log (str): Arquivo de log adicional, se desejado
    """
    numerico = _nivel_numerico(nivel)
    for logger in _registrados.values():
        logger.setLevel(numerico)
        if arquivo_log and not any(isinstance(h, RotatingFileHandler) for h in logger.handlers):
            adicionar_arquivo(logger, arquivo_log)
