"""
Módulo de configuração da bancada CGYRO.

A classe Config reúne os parâmetros do harness, dos kernels e dos
relatórios. Os valores partem de DEFAULT_CONFIG e podem ser sobrescritos
por um arquivo JSON; variáveis de ambiente não são consultadas.
"""

import copy
import json
import numbers
from pathlib import Path

from utils.logger import setup_logger

logger = setup_logger('utils.config')

GIB = 2 ** 30


def _inteiro_positivo(valor):
    return isinstance(valor, numbers.Integral) and not isinstance(valor, bool) and valor >= 1


def _inteiro_nao_negativo(valor):
    return isinstance(valor, numbers.Integral) and not isinstance(valor, bool) and valor >= 0


def _real_positivo(valor):
    return isinstance(valor, numbers.Real) and not isinstance(valor, bool) and valor > 0


def _texto(valor):
    return isinstance(valor, str) and bool(valor.strip())


# Regras aplicadas aos valores vindos de arquivo; chaves fora daqui não são conferidas
REGRAS = {
    'passos_por_relatorio': _inteiro_positivo,
    'passo_tempo': _real_positivo,
    'orcamento_memoria': _inteiro_nao_negativo,
    'bytes_mem': _inteiro_nao_negativo,
    'deslocamento_str': lambda v: isinstance(v, numbers.Integral) and not isinstance(v, bool),
    'sistema': _texto,
    'tipo_xpu': _texto,
    'mostrar_progresso': lambda v: isinstance(v, bool),
    'normalizacao_padrao': lambda v: v in ('raw', 'per_node', 'per_xpu'),
    'baseline_padrao': _texto,
    'secoes_memoria': lambda v: isinstance(v, list) and bool(v) and all(_texto(s) for s in v),
    'nivel_log': lambda v: str(v).upper() in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'),
}


class Config:
    """
    Parâmetros da bancada com sobreposição por arquivo JSON.

    Valores de arquivo que violam REGRAS são descartados com aviso e o
    padrão correspondente é mantido.
    """

    DEFAULT_CONFIG = {
        # Harness
        'passos_por_relatorio': 10,
        'passo_tempo': 1e-3,
        'orcamento_memoria': GIB,
        'bytes_mem': 0,
        'deslocamento_str': 1,
        'sistema': 'local',
        'tipo_xpu': 'CPU numpy',
        'mostrar_progresso': True,

        # Relatórios
        'normalizacao_padrao': 'per_xpu',
        'baseline_padrao': 'a100-80g',
        'secoes_memoria': ['mem'],

        # Logging
        'nivel_log': 'WARNING',
        'arquivo_log': None,
    }

    def __init__(self, config_file=None):
        """
        Monta a configuração.

        Args:
            config_file (str): Arquivo JSON opcional aplicado sobre os padrões
        """
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        if config_file:
            self.carregar_arquivo(config_file)

    def carregar_arquivo(self, config_file):
        """
        Aplica um arquivo JSON sobre a configuração atual.

        Chaves desconhecidas são aceitas com aviso; valores inválidos para
        chaves conhecidas são ignorados.

        Args:
            config_file (str): Caminho do arquivo

        Returns:
            bool: False se o arquivo não pôde ser lido ou não é um objeto JSON
        """
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                config_usuario = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Configuração {config_file} não lida ({e}); padrões mantidos")
            return False

        if not isinstance(config_usuario, dict):
            logger.warning(f"{config_file} não contém um objeto JSON; configuração ignorada")
            return False

        desconhecidas = sorted(set(config_usuario) - set(self.DEFAULT_CONFIG))
        if desconhecidas:
            logger.warning(f"Chaves de configuração desconhecidas ignoradas pelo código: {desconhecidas}")

        for chave, valor in config_usuario.items():
            regra = REGRAS.get(chave)
            if regra is not None and not regra(valor):
                logger.warning(f"Valor inválido para {chave}: {valor!r}; mantido {self.config[chave]!r}")
                continue
            self.config[chave] = valor

        logger.info(f"Configuração aplicada: {config_file}")
        return True

    def get(self, chave, padrao=None):
        """Valor de uma chave, ou padrao se ela não existir."""
        return self.config.get(chave, padrao)

    def set(self, chave, valor):
        self.config[chave] = valor

    def salvar(self, arquivo):
        """
        Grava a configuração efetiva em JSON, criando o diretório se preciso.

        Args:
            arquivo (str): Destino

        Returns:
            bool: True se gravado
        """
        try:
            Path(arquivo).parent.mkdir(parents=True, exist_ok=True)
            with open(arquivo, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2, ensure_ascii=False)
        except OSError as e:
            logger.error(f"Falha ao gravar a configuração em {arquivo}: {e}")
            return False
        logger.info(f"Configuração efetiva salva em {arquivo}")
        return True
