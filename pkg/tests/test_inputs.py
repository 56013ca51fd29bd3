"""
Testes do catálogo de entradas e da aritmética de formas.
"""

from fractions import Fraction

import pytest

from inputs.catalogo import (MEMORIA_PUBLICADA_GB, catalog, catalog_names, dump_input_file,
                             find_input, load_input_file)
from inputs.grade import (BenchmarkInput, CollisionMode, GridShape, derive_fft_shape,
                          estimate_collision_memory, scale_input)
from utils.erros import (ByteCountOverflowError, InputFileError, PreconditionError,
                         ScaleError)

GIB = 2 ** 30

LINHAS_CATALOGO = [
    ('n102', (192, 24, 32, 16, 8, 2), 37_748_736, (288, 96), 6144),
    ('sh03s', (480, 32, 48, 24, 8, 3), 424_673_280, (720, 144), 18432),
    ('n103', (512, 32, 64, 24, 8, 3), 603_979_776, (768, 192), 18432),
    ('bg03n', (864, 24, 96, 18, 8, 2), 573_308_928, (1296, 288), 6912),
    ('sh04n', (1152, 16, 128, 16, 8, 3), 905_969_664, (1728, 384), 6144),
    ('bg04n', (1344, 16, 192, 16, 4, 2), 528_482_304, (2016, 576), 2048),
]


def test_catalogo_tem_seis_entradas_na_ordem_publicada():
    assert catalog_names() == ['n102', 'sh03s', 'n103', 'bg03n', 'sh04n', 'bg04n']
    assert len(catalog()) == 6


@pytest.mark.parametrize('nome, dims, total, fft, lote', LINHAS_CATALOGO)
def test_linhas_do_catalogo(entradas, nome, dims, total, fft, lote):
    entrada = entradas[nome]
    assert entrada.grid.dims() == dims
    assert entrada.grid.total() == total
    forma = derive_fft_shape(entrada.grid)
    assert (forma.fft_x, forma.fft_y) == fft
    assert forma.batch == lote
    assert forma.size_2d() == f"({fft[0]} x {fft[1]})"


def test_modos_de_colisao_do_catalogo(entradas):
    assert entradas['n102'].collision == CollisionMode.full(4)
    assert str(entradas['sh03s'].collision) == 'Full, fp32'
    for nome in ('n103', 'bg03n', 'sh04n', 'bg04n'):
        assert not entradas[nome].collision.is_full


def test_total_sh03s_e_o_produto_das_dimensoes(entradas):
    # O rótulo publicado "425M" arredonda o produto real
    assert entradas['sh03s'].grid.total() == 480 * 32 * 48 * 24 * 8 * 3


def test_forma_fft_de_grade_minima():
    forma = derive_fft_shape(GridShape(2, 1, 1, 1, 1, 1))
    assert (forma.fft_x, forma.fft_y, forma.batch) == (3, 3, 1)


def test_forma_fft_rejeita_d1_impar():
    with pytest.raises(PreconditionError):
        derive_fft_shape(GridShape(3, 1, 1, 1, 1, 1))


def test_memoria_de_colisao_n102(entradas):
    memoria = estimate_collision_memory(entradas['n102'].grid, CollisionMode.full(4))
    assert memoria == 38_654_705_664
    assert memoria / GIB == pytest.approx(36.0)
    assert memoria / GIB == pytest.approx(MEMORIA_PUBLICADA_GB['n102'], rel=0.01)


def test_memoria_de_colisao_sh03s(entradas):
    memoria = estimate_collision_memory(entradas['sh03s'].grid, CollisionMode.full(4))
    assert memoria == 978_447_237_120
    assert round(memoria / GIB, 1) == 911.2
    assert memoria / GIB == pytest.approx(MEMORIA_PUBLICADA_GB['sh03s'], rel=0.01)


def test_memoria_de_ponto_unico():
    assert estimate_collision_memory(GridShape(1, 1, 1, 1, 1, 1), CollisionMode.full(8)) == 8


def test_memoria_simplificada_e_zero(entradas):
    assert estimate_collision_memory(entradas['bg04n'].grid, CollisionMode.simplified()) == 0


def test_memoria_acima_de_64_bits():
    grade = GridShape(2 ** 20, 2 ** 10, 2 ** 10, 2 ** 10, 2 ** 10, 2 ** 2)
    with pytest.raises(ByteCountOverflowError):
        estimate_collision_memory(grade, CollisionMode.full(8))


def test_grade_rejeita_dimensao_nao_positiva():
    with pytest.raises(PreconditionError):
        GridShape(4, 0, 1, 1, 1, 1)


def test_entry_bytes_invalido():
    with pytest.raises(PreconditionError):
        CollisionMode.full(2)


def test_escala_n102_um_oitavo(entradas):
    reduzida = scale_input(entradas['n102'], Fraction(1, 8))
    assert reduzida.name == 'n102'
    assert reduzida.grid.dims() == (24, 24, 4, 2, 8, 2)
    assert reduzida.scale == Fraction(1, 8)
    forma = derive_fft_shape(reduzida.grid)
    assert (forma.fft_x, forma.fft_y, forma.batch) == (36, 12, 768)


def test_escala_aceita_texto(entradas):
    assert scale_input(entradas['n102'], '1/8') == scale_input(entradas['n102'], Fraction(1, 8))


def test_escala_unitaria_e_identidade(entradas):
    assert scale_input(entradas['n103'], 1) is entradas['n103']


def test_escala_nao_inteira_nomeia_a_dimensao(entradas):
    with pytest.raises(ScaleError) as erro:
        scale_input(entradas['n102'], Fraction(1, 3))
    assert erro.value.dimensao == 'd3'


def test_escala_que_torna_d1_impar():
    entrada = BenchmarkInput('seis', GridShape(6, 1, 2, 2, 1, 1), CollisionMode.simplified())
    with pytest.raises(ScaleError) as erro:
        scale_input(entrada, '1/2')
    assert erro.value.dimensao == 'd1'


@pytest.mark.parametrize('fator', [0, 2, '-1/2'])
def test_escala_fora_do_intervalo(entradas, fator):
    with pytest.raises(PreconditionError):
        scale_input(entradas['n102'], fator)


def test_escalas_sucessivas_acumulam(entradas):
    duas_vezes = scale_input(scale_input(entradas['n102'], '1/2'), '1/4')
    assert duas_vezes.scale == Fraction(1, 8)
    assert duas_vezes.grid == scale_input(entradas['n102'], '1/8').grid


def test_entrada_rejeita_nome_vazio():
    with pytest.raises(PreconditionError):
        BenchmarkInput(' ', GridShape(2, 1, 1, 1, 1, 1), CollisionMode.simplified())


def test_arquivo_de_entrada_ida_e_volta(tmp_path, entradas):
    caminho = dump_input_file(entradas['sh03s'], tmp_path / 'sh03s.in')
    assert load_input_file(caminho) == entradas['sh03s']


def test_arquivo_de_entrada_com_comentarios(tmp_path):
    caminho = tmp_path / 'pequena.in'
    caminho.write_text(
        "# entrada de teste\n"
        "NAME=pequena\n"
        "D1=8\nD2=2\nD3=2\nD4=2\nD5=1\nD6=1  # uma espécie\n"
        "COLLISION=simplified\n",
        encoding='utf-8',
    )
    entrada = load_input_file(caminho)
    assert entrada.grid.dims() == (8, 2, 2, 2, 1, 1)
    assert not entrada.collision.is_full


def test_arquivo_de_entrada_chave_desconhecida_informa_linha(tmp_path):
    caminho = tmp_path / 'ruim.in'
    caminho.write_text("NAME=x\nD1=2\nFOO=3\n", encoding='utf-8')
    with pytest.raises(InputFileError) as erro:
        load_input_file(caminho)
    assert erro.value.linha == 3


def test_arquivo_de_entrada_incompleto(tmp_path):
    caminho = tmp_path / 'incompleto.in'
    caminho.write_text("NAME=x\nD1=2\n", encoding='utf-8')
    with pytest.raises(InputFileError):
        load_input_file(caminho)


def test_find_input_por_nome_e_por_arquivo(tmp_path, entradas):
    assert find_input('SH03S') is entradas['sh03s']
    caminho = dump_input_file(entradas['bg03n'], tmp_path / 'bg03n.in')
    assert find_input(str(caminho)) == entradas['bg03n']


def test_find_input_desconhecida():
    with pytest.raises(PreconditionError):
        find_input('n999')
