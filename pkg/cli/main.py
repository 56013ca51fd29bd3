"""
Módulo principal da bancada CGYRO.

Este módulo contém o ponto de entrada de linha de comando que liga o
catálogo de entradas, o harness e os relatórios. Verbos: list, describe,
run, report e validate.

Códigos de saída: 0 sucesso, 1 erro de uso, 2 erro de dados, 3 erro de
execução.
"""

import argparse
import os
import sys

# Adiciona o diretório raiz ao path para importar módulos do projeto
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pandas as pd

from fftplan.especificacao import BackendSemantics
from harness.execucao import RunConfig, run
from inputs.catalogo import MEMORIA_PUBLICADA_GB, catalog, find_input
from inputs.grade import derive_fft_shape, estimate_collision_memory, scale_input
from report.analise import (figure_table, parse_section_set, relative_performance,
                            section_breakdown)
from report.emissor import FORMATOS, emit
from report.ingestao import ValidadorRegistros, ingest
from report.registros import bundled_dataset
from report.sistemas import systems
from utils.config import GIB, Config
from utils.erros import (BenchmarkError, DataError, InputFileError, PreconditionError,
                         ReportError)
from utils.logger import definir_nivel, setup_logger

logger = setup_logger('cli')

SAIDA_OK = 0
SAIDA_USO = 1
SAIDA_DADOS = 2
SAIDA_EXECUCAO = 3


class ErroUso(Exception):
    """Linha de comando inválida."""


class ParserArgumentos(argparse.ArgumentParser):
    """ArgumentParser que sinaliza erro de uso em vez de encerrar o processo."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ErroUso(f"{self.prog}: erro: {message}")


def parse_arguments(argv=None):
    """Parse os argumentos da linha de comando."""
    comuns = argparse.ArgumentParser(add_help=False)
    comuns.add_argument('--config', type=str,
                        help='Caminho para arquivo de configuração JSON')
    comuns.add_argument('-v', '--verbose', action='store_true',
                        help='Exibe mensagens de log detalhadas')
    comuns.add_argument('-q', '--quiet', action='store_true',
                        help='Exibe apenas erros e desativa a barra de progresso')

    parser = ParserArgumentos(prog='cgyro-bench',
                              description='Bancada de desempenho CGYRO: catálogo, harness e relatórios')
    verbos = parser.add_subparsers(dest='verbo', metavar='verbo')
    verbos.required = True

    p_list = verbos.add_parser('list', parents=[comuns], help='Lista as entradas do catálogo')
    p_list.add_argument('--systems', action='store_true',
                        help='Lista os sistemas HPC avaliados em vez das entradas')

    p_describe = verbos.add_parser('describe', parents=[comuns], help='Descreve uma entrada')
    p_describe.add_argument('input', type=str, help='Nome no catálogo ou arquivo de entrada')
    p_describe.add_argument('--scale', type=str, help='Fator de redução, ex. 1/8')

    p_run = verbos.add_parser('run', parents=[comuns], help='Executa o harness')
    p_run.add_argument('--input', type=str, required=True,
                       help='Nome no catálogo ou arquivo de entrada')
    p_run.add_argument('--scale', type=str, default='1', help='Fator de redução, ex. 1/8')
    p_run.add_argument('--steps', type=int, help='Passos por passo de relatório')
    p_run.add_argument('--reports', type=int, default=1, help='Número de passos de relatório')
    p_run.add_argument('--semantics', type=str, choices=['natural', 'reversed'], default='natural',
                       help='Semântica de planejamento das FFTs')
    p_run.add_argument('--workers', type=int, default=1, help='Número de workers')
    p_run.add_argument('--seed', type=int, default=0, help='Semente do estado inicial')
    p_run.add_argument('--out', type=str, required=True,
                       help='Arquivo de registros de tempo (recriado a cada execução)')

    p_report = verbos.add_parser('report', parents=[comuns], help='Gera tabelas de desempenho relativo')
    p_report.add_argument('--data', type=str, action='append',
                          help="Arquivo de registros ou 'bundled' (repetível)")
    p_report.add_argument('--input', type=str, help='Restringe a uma entrada')
    p_report.add_argument('--sections', type=str, default='nl',
                          help='nl, maintained, memory, all ou lista separada por vírgulas')
    p_report.add_argument('--baseline', type=str, help='Registro de referência, ex. a100-80g')
    p_report.add_argument('--norm', type=str, choices=['raw', 'per_node', 'per_xpu'],
                          help='Normalização das taxas')
    p_report.add_argument('--format', type=str, choices=list(FORMATOS), default='text',
                          help='Formato de saída')
    p_report.add_argument('--out', type=str, help='Arquivo de saída (padrão: saída padrão)')
    p_report.add_argument('--absolute', action='store_true',
                          help='Tempos absolutos por seção de uma entrada')

    p_validate = verbos.add_parser('validate', parents=[comuns], help='Valida um arquivo de registros')
    p_validate.add_argument('path', type=str, help='Arquivo a validar')

    return parser.parse_args(argv)


def _comando_list(args, config):
    if args.systems:
        for sistema in systems():
            print(sistema.resumo())
        return SAIDA_OK
    for entrada in catalog():
        print(f"{entrada.name:<6} {str(entrada.grid):<34} {entrada.grid.total():>12,}  {entrada.collision}")
    return SAIDA_OK


def _comando_describe(args, config):
    entrada = find_input(args.input)
    if args.scale:
        entrada = scale_input(entrada, args.scale)
    grid = entrada.grid
    forma = derive_fft_shape(grid)
    memoria = estimate_collision_memory(grid, entrada.collision)
    orcamento = config.get('orcamento_memoria')

    print(f"Entrada: {entrada.name} (escala {entrada.scale})")
    print(f"Grade: {grid} = {grid.total():,} pontos")
    print(f"Colisão: {entrada.collision}")
    print(f"FFT 2D: {forma.size_2d()}")
    print(f"Lote de FFTs: {forma.batch}")
    print(f"Memória de colisão: {memoria:,} bytes ({memoria / GIB:.1f} GiB)")
    if entrada.name in MEMORIA_PUBLICADA_GB and entrada.scale == 1:
        print(f"Memória publicada: {MEMORIA_PUBLICADA_GB[entrada.name]} GB")
    cabe = 'sim' if memoria <= orcamento else 'não'
    print(f"Cabe no orçamento ({orcamento / GIB:.1f} GiB): {cabe}")
    return SAIDA_OK


def _comando_run(args, config):
    entrada = scale_input(find_input(args.input), args.scale)
    saida = args.out
    run_config = RunConfig(
        input=entrada,
        steps_per_report=args.steps or config.get('passos_por_relatorio'),
        reports=args.reports,
        semantics=BackendSemantics.parse(args.semantics),
        workers=args.workers,
        out_path=saida,
        seed=args.seed,
        dt=config.get('passo_tempo'),
        memory_budget=config.get('orcamento_memoria'),
        mem_bytes=config.get('bytes_mem'),
        str_shift=config.get('deslocamento_str'),
        system=config.get('sistema'),
        xpu_type=config.get('tipo_xpu'),
        progress=bool(config.get('mostrar_progresso')) and not args.quiet,
    )
    resultado = run(run_config)

    tabela = pd.DataFrame([t.as_dict() for t in resultado.timings])
    tabela.insert(0, 'report', range(1, len(resultado.timings) + 1))
    tabela['total'] = [t.total() for t in resultado.timings]
    print(emit(tabela, 'text'), end='')
    print(f"checksum: {resultado.checksum!r}")
    print(f"registros: {saida}")
    return SAIDA_OK


def _carregar_registros(fontes):
    registros = []
    for fonte in fontes or ['bundled']:
        if fonte == 'bundled':
            registros.extend(bundled_dataset())
        else:
            registros.extend(ingest([fonte]))
    return registros


def _comando_report(args, config):
    registros = _carregar_registros(args.data)
    if args.absolute:
        if not args.input:
            raise PreconditionError("--absolute exige --input")
        tabela = section_breakdown(registros, args.input)
    else:
        secoes = parse_section_set(args.sections, config.get('secoes_memoria'))
        baseline = args.baseline or config.get('baseline_padrao')
        norm = args.norm or config.get('normalizacao_padrao')
        if args.input:
            tabela = relative_performance(registros, args.input, secoes, baseline, norm)
        else:
            tabela = figure_table(registros, secoes, baseline, norm)

    conteudo = emit(tabela, args.format, args.out)
    if not args.out:
        print(conteudo, end='')
    return SAIDA_OK


def _comando_validate(args, config):
    validador = ValidadorRegistros()
    valido = validador.validar_arquivo(args.path)
    relatorio = validador.gerar_relatorio()
    for erro in relatorio['erros']:
        print(erro, file=sys.stderr)
    print(f"{args.path}: {relatorio['total_registros']} registros, {relatorio['total_erros']} erros")
    return SAIDA_OK if valido else SAIDA_DADOS


COMANDOS = {
    'list': _comando_list,
    'describe': _comando_describe,
    'run': _comando_run,
    'report': _comando_report,
    'validate': _comando_validate,
}


def main(argv=None):
    """
    Função principal da bancada.

    Args:
        argv (list): Argumentos; sys.argv[1:] por padrão

    Returns:
        int: Código de saída
    """
    try:
        args = parse_arguments(argv)
    except ErroUso as e:
        print(str(e), file=sys.stderr)
        return SAIDA_USO
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else SAIDA_USO

    config = Config(args.config)
    nivel = 'DEBUG' if args.verbose else 'ERROR' if args.quiet else config.get('nivel_log')
    definir_nivel(nivel, config.get('arquivo_log'))

    try:
        return COMANDOS[args.verbo](args, config)
    except (DataError, InputFileError, PreconditionError, ReportError) as e:
        logger.error(f"Erro de dados em {args.verbo}: {str(e)}")
        print(f"erro: {e}", file=sys.stderr)
        return SAIDA_DADOS
    except (BenchmarkError, OSError) as e:
        logger.error(f"Erro de execução em {args.verbo}: {str(e)}")
        print(f"erro: {e}", file=sys.stderr)
        return SAIDA_EXECUCAO


if __name__ == '__main__':
    sys.exit(main())
