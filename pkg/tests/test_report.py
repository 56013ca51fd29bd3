"""
Testes do pacote de relatórios: conjunto embutido, análise relativa,
emissão e ingestão.
"""

from collections import Counter

import pandas as pd
import pytest
from lxml import etree

from harness.tempos import SectionTiming
from report.analise import (Normalization, SectionSet, builtin_sets, figure_table,
                            parse_section_set, relative_performance, section_breakdown,
                            total_time)
from report.emissor import SVG_NS, emit
from report.ingestao import ValidadorRegistros, average_records, ingest
from report.registros import TimingRecord, bundled_dataset, record_key, records_to_frame
from report.sistemas import system_for_key, systems
from utils.erros import DataError, PreconditionError, ReportError

CABECALHO = 'system,xpu_type,n_xpu,n_nodes,input,nl,coll,str,field,shear,mem,io,comm,steps_per_report,seed\n'


@pytest.fixture(scope='module')
def publicados():
    return bundled_dataset()


def _registro(publicados, entrada, chave):
    return next(r for r in publicados if r.input == entrada and r.key == chave)


def _linha(tabela, chave):
    return tabela[tabela['key'] == chave].iloc[0]


def _escalar(registros, fator):
    escalados = []
    for r in registros:
        tempos = SectionTiming.from_mapping({s: v * fator for s, v in r.sections.as_dict().items()})
        escalados.append(TimingRecord(r.system, r.xpu_type, r.n_xpu, r.n_nodes, r.input, tempos))
    return escalados


class TestConjuntoEmbutido:
    def test_vinte_e_oito_registros(self, publicados):
        assert len(publicados) == 28
        contagem = Counter(r.input for r in publicados)
        assert contagem == {'n102': 5, 'sh03s': 4, 'n103': 5, 'bg03n': 5, 'sh04n': 4, 'bg04n': 5}

    def test_valores_publicados(self, publicados):
        max1550 = _registro(publicados, 'n102', 'max1550')
        assert (max1550.n_xpu, max1550.n_nodes) == (4, 1)
        assert max1550.sections.nl == 3.6
        assert max1550.sections.comm == 2.5
        assert max1550.steps_per_report is None
        assert _registro(publicados, 'sh03s', 'max9480').n_xpu == 48

    def test_sh03s_sem_a100_40g(self, publicados):
        assert 'a100-40g' not in {r.key for r in publicados if r.input == 'sh03s'}

    def test_chaves_dos_tipos_de_xpu(self):
        assert record_key('NVIDIA A100 80G GPU') == 'a100-80g'
        assert record_key('  intel   max 1550 gpu ') == 'max1550'
        assert record_key('CPU numpy') == 'cpu-numpy'

    def test_quadro_no_esquema_dos_registros(self, publicados):
        quadro = records_to_frame(publicados)
        assert quadro.shape == (28, 15)
        assert quadro['steps_per_report'].isna().all()


class TestTotais:
    def test_total_de_todas_as_secoes(self, publicados):
        conjunto = builtin_sets()['all']
        assert total_time(_registro(publicados, 'n102', 'max1550'), conjunto) == pytest.approx(10.0)

    def test_total_mantido(self, publicados):
        conjunto = builtin_sets()['maintained']
        assert total_time(_registro(publicados, 'sh03s', 'mi250x'), conjunto) == pytest.approx(10.1)

    def test_total_de_conjunto_arbitrario(self, publicados):
        conjunto = parse_section_set('comm, nl')
        assert conjunto.members == ('nl', 'comm')
        assert total_time(_registro(publicados, 'n102', 'a100-80g'), conjunto) == pytest.approx(5.5)

    def test_conjuntos_embutidos(self):
        conjuntos = builtin_sets()
        assert list(conjuntos) == ['nl', 'maintained', 'memory', 'all']
        assert 'nl' not in conjuntos['maintained'].members
        assert conjuntos['memory'].members == ('mem',)
        assert len(conjuntos['all'].members) == 8

    def test_conjunto_de_memoria_configuravel(self):
        assert parse_section_set('memory', ('str', 'mem')).members == ('str', 'mem')

    @pytest.mark.parametrize('texto', ['', 'nl,gpu', ' , '])
    def test_conjunto_invalido(self, texto):
        with pytest.raises(PreconditionError):
            parse_section_set(texto)

    def test_conjunto_remove_repeticoes(self):
        assert SectionSet('x', ('io', 'nl', 'io')).members == ('nl', 'io')


class TestDesempenhoRelativo:
    def test_razao_nl_max1550_contra_a100(self, publicados):
        tabela = relative_performance(publicados, 'n102', 'nl', 'a100-80g', 'per_xpu')
        assert _linha(tabela, 'max1550')['ratio'] == pytest.approx(4.2 / 3.6)
        assert round(_linha(tabela, 'max1550')['ratio'], 3) == 1.167

    def test_razao_de_tempo_de_comm(self, publicados):
        comm = SectionSet('comm', ('comm',))
        max1550 = total_time(_registro(publicados, 'n102', 'max1550'), comm)
        a100 = total_time(_registro(publicados, 'n102', 'a100-80g'), comm)
        assert max1550 / a100 == pytest.approx(1.92, abs=0.01)

    def test_baseline_tem_razao_um(self, publicados):
        for nome in ('nl', 'maintained', 'memory', 'all'):
            tabela = relative_performance(publicados, 'n103', nome, 'mi250x')
            assert _linha(tabela, 'mi250x')['ratio'] == pytest.approx(1.0)

    def test_colunas_e_ordem_preservada(self, publicados):
        tabela = relative_performance(publicados, 'bg04n')
        assert list(tabela.columns) == ['input', 'system', 'xpu_type', 'key', 'n_xpu', 'n_nodes',
                                        'total', 'ratio', 'sections', 'norm', 'baseline']
        assert list(tabela['key']) == ['max9480', 'max1550', 'mi250x', 'a100-80g', 'a100-40g']
        assert set(tabela['baseline']) == {'a100-80g'}

    def test_normalizacao_por_no(self, publicados):
        tabela = relative_performance(publicados, 'n102', 'nl', 'a100-80g', 'per_node')
        # 16 XPUs em 8 nós contra 4 XPUs em 1 nó
        esperado = (4.2 * 1) / (3.1 * 8)
        assert _linha(tabela, 'max9480')['ratio'] == pytest.approx(esperado)

    def test_normalizacao_bruta(self, publicados):
        tabela = relative_performance(publicados, 'n102', 'all', 'a100-80g', Normalization.RAW)
        assert _linha(tabela, 'max9480')['ratio'] == pytest.approx(9.1 / 13.3)

    def test_invariante_a_escala_dos_tempos(self, publicados):
        da_entrada = [r for r in publicados if r.input == 'sh04n']
        original = relative_performance(da_entrada, sections='all')
        escalada = relative_performance(_escalar(da_entrada, 3.7), sections='all')
        pd.testing.assert_series_equal(original['ratio'], escalada['ratio'], rtol=1e-12)

    def test_invariante_a_ordem_dos_registros(self, publicados):
        da_entrada = [r for r in publicados if r.input == 'bg03n']
        direta = relative_performance(da_entrada, sections='maintained').set_index('key')['ratio']
        reversa = relative_performance(da_entrada[::-1], sections='maintained').set_index('key')['ratio']
        pd.testing.assert_series_equal(direta.sort_index(), reversa.sort_index())

    @pytest.mark.parametrize('norm', ['raw', 'per_node', 'per_xpu'])
    @pytest.mark.parametrize('nome', ['nl', 'maintained', 'all'])
    def test_melhor_sistema_independe_da_baseline(self, publicados, norm, nome):
        chaves = [r.key for r in publicados if r.input == 'n102']
        melhores = set()
        for baseline in chaves:
            tabela = relative_performance(publicados, 'n102', nome, baseline, norm)
            melhores.add(tabela.loc[tabela['ratio'].idxmax(), 'key'])
        assert len(chaves) == 5
        assert len(melhores) == 1

    def test_baseline_por_sistema_ou_tipo(self, publicados):
        por_sistema = relative_performance(publicados, 'n102', baseline='Frontier')
        por_tipo = relative_performance(publicados, 'n102', baseline='AMD MI250X GPU')
        assert set(por_sistema['baseline']) == set(por_tipo['baseline']) == {'mi250x'}

    def test_baseline_ausente(self, publicados):
        with pytest.raises(ReportError):
            relative_performance(publicados, 'sh03s', baseline='a100-40g')

    def test_baseline_ambigua(self, publicados):
        with pytest.raises(ReportError):
            relative_performance(publicados, 'n102', baseline='perlmutter')

    def test_entradas_misturadas(self, publicados):
        with pytest.raises(ReportError):
            relative_performance(publicados)

    def test_entrada_sem_registros(self, publicados):
        with pytest.raises(ReportError):
            relative_performance(publicados, 'n999')

    def test_conjunto_que_soma_zero_vira_nan(self, publicados):
        tabela = relative_performance(publicados, 'n102', 'shear')
        assert tabela['ratio'].isna().all()
        assert (tabela['total'] == 0).all()
        assert 'n/a' in emit(tabela, 'text')

    def test_normalizacao_desconhecida(self, publicados):
        with pytest.raises(PreconditionError):
            relative_performance(publicados, 'n102', norm='por_rack')


class TestTabelasDasFiguras:
    @pytest.mark.parametrize('conjunto', ['nl', 'maintained', 'memory', 'all'])
    def test_quatro_comparacoes_sobre_seis_entradas(self, publicados, conjunto):
        tabela = figure_table(publicados, conjunto)
        assert list(tabela['input'].unique()) == ['n102', 'sh03s', 'n103', 'bg03n', 'sh04n', 'bg04n']
        assert len(tabela) == 28

    def test_entrada_sem_baseline_e_omitida(self, publicados):
        tabela = figure_table(publicados, 'nl', baseline='a100-40g')
        assert 'sh03s' not in set(tabela['input'])
        assert len(tabela['input'].unique()) == 5

    def test_nenhuma_entrada_comparavel(self, publicados):
        with pytest.raises(ReportError):
            figure_table(publicados, 'nl', baseline='h100')

    def test_decomposicao_absoluta(self, publicados):
        tabela = section_breakdown(publicados, 'n102')
        assert len(tabela) == 5
        assert tabela.loc[tabela['key'] == 'max1550', 'total'].iloc[0] == pytest.approx(10.0)


class TestEmissao:
    def test_texto_com_duas_casas(self, publicados):
        texto = emit(relative_performance(publicados, 'n102'), 'text')
        assert '1.17' in texto
        assert 'max1550' in texto

    def test_dsv_com_cabecalho(self, publicados):
        dsv = emit(relative_performance(publicados, 'n102'), 'dsv')
        linhas = dsv.splitlines()
        assert linhas[0].startswith('input,system,xpu_type,key')
        assert len(linhas) == 6

    def test_dsv_com_separador(self, publicados):
        dsv = emit(relative_performance(publicados, 'n102'), 'dsv', separador=';')
        assert dsv.splitlines()[0].startswith('input;system')

    def test_tabela_vazia_emite_so_o_cabecalho(self):
        vazia = pd.DataFrame(columns=['input', 'key', 'ratio'])
        assert emit(vazia, 'dsv') == 'input,key,ratio\n'
        assert emit(vazia, 'text').strip().split() == ['input', 'key', 'ratio']

    def test_svg_bem_formado(self, publicados):
        tabela = figure_table(publicados, 'nl')
        svg = etree.fromstring(emit(tabela, 'svg').encode('utf-8'))
        assert svg.tag == f'{{{SVG_NS}}}svg'
        grupos = svg.findall(f'{{{SVG_NS}}}g')
        assert len(grupos) == 6
        assert len(svg.findall(f'.//{{{SVG_NS}}}rect')) == 28

    def test_svg_omite_barras_nan(self, publicados):
        svg = etree.fromstring(emit(relative_performance(publicados, 'n102', 'shear'), 'svg').encode('utf-8'))
        assert svg.findall(f'.//{{{SVG_NS}}}rect') == []

    def test_formato_desconhecido(self, publicados):
        with pytest.raises(PreconditionError):
            emit(relative_performance(publicados, 'n102'), 'xlsx')

    def test_grava_em_arquivo(self, tmp_path, publicados):
        caminho = tmp_path / 'saida' / 'fig.svg'
        conteudo = emit(figure_table(publicados, 'all'), 'svg', caminho)
        assert caminho.read_text(encoding='utf-8') == conteudo


class TestIngestao:
    def test_ida_e_volta_pelo_dsv(self, tmp_path, publicados):
        caminho = tmp_path / 'registros.csv'
        emit(records_to_frame(publicados), 'dsv', caminho)
        assert ingest(caminho) == publicados

    def test_tempo_negativo_informa_a_linha(self, tmp_path):
        caminho = tmp_path / 'ruim.csv'
        caminho.write_text(
            CABECALHO
            + 'local,CPU numpy,1,1,n102,1.0,0,0,0,0,0,0,0,10,0\n'
            + '\n'
            + 'local,CPU numpy,1,1,n102,-1.0,0,0,0,0,0,0,0,10,0\n',
            encoding='utf-8',
        )
        with pytest.raises(DataError) as erro:
            ingest([caminho])
        assert erro.value.linha == 4

    @pytest.mark.parametrize('linha', [
        'local,CPU numpy,1,2,n102,1,0,0,0,0,0,0,0,,\n',
        'local,CPU numpy,1,1,n999,1,0,0,0,0,0,0,0,,\n',
        'local,CPU numpy,1,1,n102,abc,0,0,0,0,0,0,0,,\n',
        'local,CPU numpy,1,1,n102,nan,0,0,0,0,0,0,0,,\n',
        'local,CPU numpy,1,1,n102,1,0,0,0,0,0,0,0,0,\n',
        'local,CPU numpy,1,1,n102,1,0,0\n',
    ])
    def test_linhas_rejeitadas(self, tmp_path, linha):
        caminho = tmp_path / 'ruim.csv'
        caminho.write_text(CABECALHO + linha, encoding='utf-8')
        validador = ValidadorRegistros()
        assert not validador.validar_arquivo(caminho)
        assert validador.erros[0][1] == 2

    def test_cabecalho_invalido(self, tmp_path):
        caminho = tmp_path / 'ruim.csv'
        caminho.write_text('a,b,c\n', encoding='utf-8')
        with pytest.raises(DataError) as erro:
            ingest(caminho)
        assert erro.value.linha == 1

    def test_media_de_dois_passos_de_relatorio(self, tmp_path):
        caminho = tmp_path / 'dois.csv'
        caminho.write_text(
            CABECALHO
            + 'local,CPU numpy,2,1,n102,0.1,0.2,0,0,0,0,0,0.3,10,7\n'
            + 'local,CPU numpy,2,1,n102,0.2,0.4,0,0,0,0,0,0.6,10,7\n',
            encoding='utf-8',
        )
        registros = ingest(caminho)
        assert len(registros) == 1
        assert registros[0].sections.nl == pytest.approx(0.15, abs=1e-12)
        assert registros[0].sections.coll == pytest.approx(0.3, abs=1e-12)
        assert registros[0].sections.comm == pytest.approx(0.45, abs=1e-12)
        assert len(ingest(caminho, average=False)) == 2

    def test_media_separa_sementes_diferentes(self, publicados):
        base = _registro(publicados, 'n102', 'mi250x')
        a = TimingRecord(base.system, base.xpu_type, 4, 1, 'n102', base.sections, 10, 1)
        b = TimingRecord(base.system, base.xpu_type, 4, 1, 'n102', base.sections, 10, 2)
        assert average_records([a, b, a]) == [a, b]

    def test_relatorio_de_validacao(self, tmp_path):
        caminho = tmp_path / 'ruim.csv'
        caminho.write_text(CABECALHO + 'local,CPU numpy,0,0,n102,1,0,0,0,0,0,0,0,,\n', encoding='utf-8')
        validador = ValidadorRegistros()
        validador.validar_arquivo(caminho)
        relatorio = validador.gerar_relatorio()
        assert relatorio['valido'] is False
        assert relatorio['total_erros'] == 1
        assert relatorio['erros'][0].startswith(f"{caminho}:2:")
        assert validador.salvar_relatorio(tmp_path / 'relatorio.json')

    def test_registro_rejeita_contagens_invalidas(self):
        with pytest.raises(PreconditionError):
            TimingRecord('x', 'y', 1, 2, 'n102', SectionTiming())


class TestSistemas:
    def test_cinco_particoes(self):
        assert [s.chave for s in systems()] == ['max1550', 'max9480', 'a100-80g', 'a100-40g', 'mi250x']

    def test_semantica_por_biblioteca_de_fft(self):
        assert system_for_key('max1550').semantics.name == 'reversed'
        assert system_for_key('MI250X').semantics.name == 'natural'
        assert system_for_key('h100') is None

    def test_resumo_menciona_a_biblioteca(self):
        assert 'cuFFT' in system_for_key('a100-80g').resumo()
