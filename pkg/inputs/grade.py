"""
Módulo da grade de simulação e da aritmética de formas derivadas.

Este módulo implementa os tipos imutáveis da grade de seis dimensões
(GridShape), da FFT 2D em lote derivada dela (FftShape), do modo de colisão
(CollisionMode) e da entrada de benchmark (BenchmarkInput), além das
operações derive_fft_shape, estimate_collision_memory e scale_input.

As dimensões são posicionais; os nomes (radial, theta, toroidal, energia,
pitch, espécies) servem apenas de documentação.
"""

import enum
import numbers
from dataclasses import dataclass, field, replace
from fractions import Fraction

from utils.erros import ByteCountOverflowError, PreconditionError, ScaleError
from utils.logger import setup_logger

logger = setup_logger('inputs.grade')

# Maior contagem de bytes representável em um inteiro de 64 bits com sinal
LIMITE_BYTES = 2 ** 63 - 1

NOMES_DIMENSOES = ('d1', 'd2', 'd3', 'd4', 'd5', 'd6')
DESCRICAO_DIMENSOES = {
    'd1': 'células radiais',
    'd2': 'células poloidais (theta)',
    'd3': 'modos toroidais',
    'd4': 'nós de energia',
    'd5': 'nós de pitch-angle',
    'd6': 'espécies',
}


def _contagem(nome, valor):
    if isinstance(valor, bool) or not isinstance(valor, numbers.Integral):
        raise PreconditionError(f"Dimensão {nome} deve ser inteira, recebido {valor!r}")
    if valor < 1:
        raise PreconditionError(f"Dimensão {nome} deve ser >= 1, recebido {valor}")
    return int(valor)


@dataclass(frozen=True)
class GridShape:
    """Grade de seis dimensões (3D espaço + 2D velocidade + espécies)."""

    d1: int
    d2: int
    d3: int
    d4: int
    d5: int
    d6: int

    def __post_init__(self):
        for nome in NOMES_DIMENSOES:
            object.__setattr__(self, nome, _contagem(nome, getattr(self, nome)))

    @classmethod
    def of(cls, dims):
        """
        Constrói a grade a partir de uma sequência de seis inteiros.

        Args:
            dims (Sequence[int]): (d1, d2, d3, d4, d5, d6)

        Returns:
            GridShape: Grade correspondente
        """
        dims = tuple(dims)
        if len(dims) != 6:
            raise PreconditionError(f"Grade precisa de 6 dimensões, recebido {len(dims)}")
        return cls(*dims)

    def dims(self):
        return (self.d1, self.d2, self.d3, self.d4, self.d5, self.d6)

    def total(self):
        """Número total de pontos da grade (d1·d2·d3·d4·d5·d6)."""
        total = 1
        for d in self.dims():
            total *= d
        return total

    def spatial(self):
        """Pontos espaciais d1·d2·d3."""
        return self.d1 * self.d2 * self.d3

    def velocity(self):
        """Dimensão velocidade-espécie Nv = d4·d5·d6."""
        return self.d4 * self.d5 * self.d6

    def batch(self):
        """Tamanho do lote de FFTs 2D: d2·d4·d5·d6."""
        return self.d2 * self.d4 * self.d5 * self.d6

    def dealiasable(self):
        """True quando d1 é par, condição para a extensão 3/2 ser inteira."""
        return self.d1 % 2 == 0

    def __str__(self):
        return '(' + ' x '.join(str(d) for d in self.dims()) + ')'


@dataclass(frozen=True)
class FftShape:
    """Forma da FFT 2D estendida (dealiasing) e tamanho do lote."""

    fft_x: int
    fft_y: int
    batch: int

    def size_2d(self):
        return f"({self.fft_x} x {self.fft_y})"


class CollisionKind(enum.Enum):
    FULL = 'FULL'
    SIMPLIFIED = 'SIMPLIFIED'


@dataclass(frozen=True)
class CollisionMode:
    """
    Modo de colisão da entrada.

    entry_bytes só tem efeito no modo Full (bytes por constante armazenada).
    """

    kind: CollisionKind
    entry_bytes: int = 8

    def __post_init__(self):
        if not isinstance(self.kind, CollisionKind):
            object.__setattr__(self, 'kind', CollisionKind(str(self.kind).upper()))
        if self.entry_bytes not in (4, 8):
            raise PreconditionError(f"entry_bytes deve ser 4 ou 8, recebido {self.entry_bytes}")

    @classmethod
    def full(cls, entry_bytes=8):
        return cls(CollisionKind.FULL, entry_bytes)

    @classmethod
    def simplified(cls):
        return cls(CollisionKind.SIMPLIFIED)

    @property
    def is_full(self):
        return self.kind is CollisionKind.FULL

    def __str__(self):
        if self.is_full:
            return f"Full, fp{self.entry_bytes * 8}"
        return "Simplified"


@dataclass(frozen=True)
class BenchmarkInput:
    """Entrada nomeada do catálogo: grade, modo de colisão e escala."""

    name: str
    grid: GridShape
    collision: CollisionMode
    scale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if not self.name or not str(self.name).strip():
            raise PreconditionError("Nome da entrada não pode ser vazio")
        object.__setattr__(self, 'scale', Fraction(self.scale))
        if self.scale <= 0:
            raise PreconditionError(f"Escala deve ser positiva, recebido {self.scale}")
        if not self.grid.dealiasable():
            raise PreconditionError(f"Entrada {self.name}: d1={self.grid.d1} deve ser par")


def derive_fft_shape(grid):
    """
    Deriva a forma da FFT 2D em lote a partir da grade.

    A regra (fft_x = 3/2·d1, fft_y = 3·d3, lote = d2·d4·d5·d6) reproduz
    todas as linhas do catálogo.

    Args:
        grid (GridShape): Grade da simulação

    Returns:
        FftShape: Forma estendida e lote

    Raises:
        PreconditionError: Se d1 for ímpar
    """
    if not grid.dealiasable():
        logger.error(f"d1={grid.d1} ímpar: extensão 3/2 não é inteira")
        raise PreconditionError(f"d1 deve ser par para o dealiasing 3/2, recebido {grid.d1}")
    return FftShape(fft_x=3 * grid.d1 // 2, fft_y=3 * grid.d3, batch=grid.batch())


def estimate_collision_memory(grid, mode):
    """
    Estima a memória das constantes de colisão.

    Modo Full: d1·d2·d3 · (d4·d5·d6)² · entry_bytes. Modo Simplified: 0.

    Args:
        grid (GridShape): Grade da simulação
        mode (CollisionMode): Modo de colisão

    Returns:
        int: Bytes necessários

    Raises:
        ByteCountOverflowError: Se a contagem não couber em 64 bits
    """
    if not mode.is_full:
        return 0
    nv = grid.velocity()
    estimativa = grid.spatial() * nv * nv * mode.entry_bytes
    if estimativa > LIMITE_BYTES:
        logger.error(f"Estimativa de memória excede 64 bits para a grade {grid}")
        raise ByteCountOverflowError(
            f"Estimativa de {estimativa} bytes para a grade {grid} excede {LIMITE_BYTES}"
        )
    return estimativa


def _fator(factor):
    if isinstance(factor, str):
        factor = factor.strip()
    try:
        return Fraction(factor)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise PreconditionError(f"Fator de escala inválido: {factor!r}") from e


def scale_input(entrada, factor):
    """
    Reduz uma entrada do catálogo para execução em bancada.

    d1, d3 e d4 são multiplicados pelo fator; d2, d5 e d6 ficam inalterados.
    O nome é preservado e a escala acumulada fica registrada na entrada.

    Args:
        entrada (BenchmarkInput): Entrada original
        factor (Fraction | int | str): Fator em (0, 1], ex. '1/8'

    Returns:
        BenchmarkInput: Entrada reduzida

    Raises:
        ScaleError: Se alguma dimensão reduzida não for inteira positiva
            (ou d1 reduzido for ímpar)
    """
    fator = _fator(factor)
    if fator <= 0 or fator > 1:
        raise PreconditionError(f"Fator de escala deve estar em (0, 1], recebido {fator}")

    grid = entrada.grid
    novos = {}
    for nome in ('d1', 'd3', 'd4'):
        valor = getattr(grid, nome) * fator
        if valor.denominator != 1 or valor < 1:
            logger.error(f"Escala {fator} de {entrada.name}: {nome} = {valor} não é inteiro positivo")
            raise ScaleError(
                f"Escala {fator} produz {nome} = {valor} para {entrada.name}; "
                f"{nome} precisa ser um inteiro positivo",
                dimensao=nome,
            )
        novos[nome] = int(valor)

    if novos['d1'] % 2:
        raise ScaleError(
            f"Escala {fator} produz d1 = {novos['d1']} ímpar para {entrada.name}",
            dimensao='d1',
        )

    if fator == 1:
        return entrada

    reduzida = replace(
        entrada,
        grid=replace(grid, **novos),
        scale=entrada.scale * fator,
    )
    logger.info(f"Entrada {entrada.name} reduzida por {fator}: {reduzida.grid}")
    return reduzida
