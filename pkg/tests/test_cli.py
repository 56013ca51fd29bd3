"""
Testes da linha de comando.
"""

import json

import pytest

from cli.main import SAIDA_DADOS, SAIDA_EXECUCAO, SAIDA_OK, SAIDA_USO, main


def _executar(capsys, *argv):
    codigo = main(list(argv))
    saida = capsys.readouterr()
    return codigo, saida.out, saida.err


def test_list_na_ordem_do_catalogo(capsys):
    codigo, saida, _ = _executar(capsys, 'list')
    assert codigo == SAIDA_OK
    nomes = [linha.split()[0] for linha in saida.splitlines()]
    assert nomes == ['n102', 'sh03s', 'n103', 'bg03n', 'sh04n', 'bg04n']
    assert '424,673,280' in saida


def test_list_de_sistemas(capsys):
    codigo, saida, _ = _executar(capsys, 'list', '--systems')
    assert codigo == SAIDA_OK
    assert len(saida.splitlines()) == 5
    assert 'oneMKL [reversed]' in saida


def test_describe_sh03s(capsys):
    codigo, saida, _ = _executar(capsys, 'describe', 'sh03s')
    assert codigo == SAIDA_OK
    assert '(720 x 144)' in saida
    assert '18432' in saida
    assert '911.2 GiB' in saida
    assert 'Memória publicada' in saida


def test_describe_com_escala(capsys):
    codigo, saida, _ = _executar(capsys, 'describe', 'n102', '--scale', '1/8')
    assert codigo == SAIDA_OK
    assert '(36 x 12)' in saida
    assert 'Lote de FFTs: 768' in saida
    assert 'sim' in saida


def test_describe_escala_nao_inteira(capsys):
    codigo, _, erro = _executar(capsys, 'describe', 'n102', '--scale', '1/3')
    assert codigo == SAIDA_DADOS
    assert 'd3' in erro


def test_describe_entrada_desconhecida(capsys):
    assert _executar(capsys, 'describe', 'n999')[0] == SAIDA_DADOS


def test_report_razao_nl_n102(capsys):
    codigo, saida, _ = _executar(capsys, 'report', '--data', 'bundled', '--input', 'n102',
                                 '--sections', 'nl', '--baseline', 'a100-80g')
    assert codigo == SAIDA_OK
    linha = next(texto for texto in saida.splitlines() if 'max1550' in texto)
    assert '1.17' in linha


def test_report_figura_em_svg(tmp_path, capsys):
    destino = tmp_path / 'fig_all.svg'
    codigo, saida, _ = _executar(capsys, 'report', '--sections', 'all', '--format', 'svg',
                                 '--out', str(destino))
    assert codigo == SAIDA_OK
    assert saida == ''
    assert destino.read_text(encoding='utf-8').count('<rect') == 28


def test_report_absoluto(capsys):
    codigo, saida, _ = _executar(capsys, 'report', '--absolute', '--input', 'n102', '--format', 'dsv')
    assert codigo == SAIDA_OK
    assert saida.splitlines()[0].startswith('input,system,xpu_type,key')
    assert len(saida.splitlines()) == 6


def test_report_absoluto_exige_entrada(capsys):
    assert _executar(capsys, 'report', '--absolute')[0] == SAIDA_DADOS


def test_report_baseline_ausente(capsys):
    codigo, _, erro = _executar(capsys, 'report', '--input', 'sh03s', '--baseline', 'a100-40g')
    assert codigo == SAIDA_DADOS
    assert 'a100-40g' in erro


@pytest.mark.parametrize('argv', [[], ['compilar'], ['run'], ['run', '--input', 'n102'],
                                  ['list', '--bogus'],
                                  ['report', '--format', 'pdf']])
def test_erros_de_uso(capsys, argv):
    assert _executar(capsys, *argv)[0] == SAIDA_USO


def test_ajuda(capsys):
    codigo, saida, _ = _executar(capsys, '--help')
    assert codigo == SAIDA_OK
    assert 'describe' in saida


def test_run_completo_excede_o_orcamento(tmp_path, capsys):
    codigo, _, erro = _executar(capsys, 'run', '-q', '--input', 'n102', '--out', str(tmp_path / 't.csv'))
    assert codigo == SAIDA_EXECUCAO
    assert 'orçamento' in erro or 'bytes' in erro


def test_run_reduzido_e_validate(tmp_path, capsys):
    saida_csv = tmp_path / 'tempos.csv'
    codigo, saida, _ = _executar(capsys, 'run', '--input', 'n102', '--scale', '1/8', '--steps', '1',
                                 '--reports', '2', '--workers', '2', '--out', str(saida_csv), '-q')
    assert codigo == SAIDA_OK
    assert 'checksum:' in saida
    assert len(saida_csv.read_text(encoding='utf-8').splitlines()) == 3

    codigo, saida, _ = _executar(capsys, 'validate', str(saida_csv))
    assert codigo == SAIDA_OK
    assert '2 registros, 0 erros' in saida

    codigo, saida, _ = _executar(capsys, 'report', '--data', str(saida_csv), '--absolute',
                                 '--input', 'n102')
    assert codigo == SAIDA_OK
    assert 'CPU numpy' in saida


def test_run_repetido_produz_o_mesmo_arquivo(tmp_path, capsys):
    saida_csv = tmp_path / 'tempos.csv'
    argv = ('run', '-q', '--input', 'n102', '--scale', '1/8', '--steps', '1', '--reports', '2',
            '--seed', '5', '--out', str(saida_csv))

    codigo, primeira, _ = _executar(capsys, *argv)
    assert codigo == SAIDA_OK
    linhas_primeira = saida_csv.read_text(encoding='utf-8').splitlines()
    codigo, segunda, _ = _executar(capsys, *argv)
    assert codigo == SAIDA_OK
    linhas_segunda = saida_csv.read_text(encoding='utf-8').splitlines()

    def checksum(texto):
        return [linha for linha in texto.splitlines() if linha.startswith('checksum:')]

    assert checksum(primeira) == checksum(segunda)
    assert len(linhas_segunda) == len(linhas_primeira) == 3
    assert [linha.split(',')[-1] for linha in linhas_segunda[1:]] == ['5', '5']

    codigo, saida, _ = _executar(capsys, 'validate', str(saida_csv))
    assert '2 registros, 0 erros' in saida


def test_run_workers_que_nao_dividem_o_lote(tmp_path, capsys):
    codigo = _executar(capsys, 'run', '-q', '--input', 'n102', '--scale', '1/8', '--workers', '5',
                       '--out', str(tmp_path / 't.csv'))[0]
    assert codigo == SAIDA_DADOS


def test_run_com_orcamento_do_arquivo_de_configuracao(tmp_path, capsys):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'orcamento_memoria': 1024}), encoding='utf-8')
    codigo = _executar(capsys, 'run', '--config', str(config), '-q', '--input', 'n102',
                       '--scale', '1/8', '--out', str(tmp_path / 't.csv'))[0]
    assert codigo == SAIDA_EXECUCAO


def test_validate_de_arquivo_invalido(tmp_path, capsys):
    caminho = tmp_path / 'ruim.csv'
    caminho.write_text(
        'system,xpu_type,n_xpu,n_nodes,input,nl,coll,str,field,shear,mem,io,comm,steps_per_report,seed\n'
        'local,CPU numpy,1,1,n102,-1,0,0,0,0,0,0,0,,\n',
        encoding='utf-8',
    )
    codigo, _, erro = _executar(capsys, 'validate', str(caminho))
    assert codigo == SAIDA_DADOS
    assert f"{caminho}:2:" in erro


def test_validate_de_arquivo_inexistente(tmp_path, capsys):
    assert _executar(capsys, 'validate', str(tmp_path / 'nada.csv'))[0] == SAIDA_EXECUCAO
