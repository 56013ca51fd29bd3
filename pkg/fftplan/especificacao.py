"""
Módulo da especificação lógica de FFTs 2D em lote e da normalização entre
semânticas de bibliotecas.

A especificação lógica (LogicalPlanSpec) descreve a transformada como o
código a enxerga: nx é a dimensão lenta, ny a rápida, ny2 = ny/2 + 1 a
extensão complexa da dimensão rápida e idist = odist = ny2·nx a distância
entre membros consecutivos do lote. Cada biblioteca realiza essa mesma
transformada com um descritor (PlanDescriptor) próprio: cuFFT e hipFFT
usam a ordem natural dos ranks, oneMKL em offload usa a ordem reversa e
preenche as duas entradas dos arrays embed.
"""

import enum
from dataclasses import dataclass

from utils.erros import PreconditionError
from utils.logger import setup_logger

logger = setup_logger('fftplan.especificacao')


class Direction(enum.Enum):
    C2R = 'C2R'
    R2C = 'R2C'


class RankOrder(enum.Enum):
    NATURAL = 'natural'
    REVERSED = 'reversed'


class EmbedStyle(enum.Enum):
    FAST_DIM_ONLY = 'fast_dim_only'
    FULL_PER_DIM = 'full_per_dim'


class Dispatch(enum.Enum):
    DEVICE_POINTER_REGION = 'device_pointer_region'
    DISPATCH_REGION = 'dispatch_region'


@dataclass(frozen=True)
class BackendSemantics:
    """Convenções de planejamento de uma biblioteca de FFT."""

    rank_order: RankOrder
    embed_style: EmbedStyle
    dispatch: Dispatch

    def __post_init__(self):
        if self.rank_order is RankOrder.REVERSED:
            esperado = (EmbedStyle.FULL_PER_DIM, Dispatch.DISPATCH_REGION)
        else:
            esperado = (EmbedStyle.FAST_DIM_ONLY, Dispatch.DEVICE_POINTER_REGION)
        if (self.embed_style, self.dispatch) != esperado:
            raise PreconditionError(
                f"Semântica inconsistente: ordem {self.rank_order.value} exige "
                f"{esperado[0].value} e {esperado[1].value}"
            )

    @classmethod
    def natural(cls):
        """Perfil cuFFT/hipFFT/FFTW: ranks em ordem natural."""
        return cls(RankOrder.NATURAL, EmbedStyle.FAST_DIM_ONLY, Dispatch.DEVICE_POINTER_REGION)

    @classmethod
    def reversed(cls):
        """Perfil oneMKL em offload: ranks reversos e região de dispatch."""
        return cls(RankOrder.REVERSED, EmbedStyle.FULL_PER_DIM, Dispatch.DISPATCH_REGION)

    @classmethod
    def parse(cls, nome):
        """
        Converte 'natural' ou 'reversed' no perfil correspondente.

        Args:
            nome (str): Nome do perfil

        Returns:
            BackendSemantics: Perfil
        """
        nome = str(nome).strip().lower()
        if nome == RankOrder.NATURAL.value:
            return cls.natural()
        if nome == RankOrder.REVERSED.value:
            return cls.reversed()
        raise PreconditionError(f"Semântica desconhecida: {nome!r} (use natural ou reversed)")

    @property
    def name(self):
        return self.rank_order.value


# Biblioteca de FFT de cada sistema avaliado e a semântica de planejamento dela
SEMANTICA_POR_BIBLIOTECA = {
    'onemkl': RankOrder.REVERSED,
    'mkl': RankOrder.NATURAL,
    'fftw': RankOrder.NATURAL,
    'cufft': RankOrder.NATURAL,
    'hipfft': RankOrder.NATURAL,
}


def semantics_for_library(biblioteca):
    """
    Retorna o perfil de semântica usado por uma biblioteca de FFT.

    Args:
        biblioteca (str): Nome da biblioteca (oneMKL, MKL, FFTW, cuFFT, hipFFT)

    Returns:
        BackendSemantics: Perfil correspondente
    """
    ordem = SEMANTICA_POR_BIBLIOTECA.get(str(biblioteca).lower())
    if ordem is None:
        raise PreconditionError(f"Biblioteca de FFT desconhecida: {biblioteca!r}")
    return BackendSemantics.parse(ordem.value)


@dataclass(frozen=True)
class LogicalPlanSpec:
    """
    Especificação lógica de uma FFT 2D em lote C2R ou R2C.

    A construção não valida os invariantes; problems() lista as violações e
    plan() as rejeita.
    """

    direction: Direction
    nx: int
    ny: int
    ny2: int
    nffts: int
    idist: int
    odist: int

    @classmethod
    def build(cls, direction, nx, ny, nffts):
        """
        Constrói uma especificação coerente a partir das dimensões lógicas.

        Args:
            direction (Direction): C2R ou R2C
            nx (int): Dimensão lenta
            ny (int): Dimensão rápida
            nffts (int): Tamanho do lote

        Returns:
            LogicalPlanSpec: Especificação com ny2, idist e odist derivados
        """
        ny2 = ny // 2 + 1
        return cls(Direction(direction), nx, ny, ny2, nffts, ny2 * nx, ny2 * nx)

    @classmethod
    def from_fft_shape(cls, fft_shape, direction, nffts=None):
        """
        Constrói a especificação para uma FftShape do catálogo.

        Args:
            fft_shape (FftShape): Forma derivada da grade
            direction (Direction): C2R ou R2C
            nffts (int): Lote, se diferente do lote completo (partição)

        Returns:
            LogicalPlanSpec: Especificação correspondente
        """
        return cls.build(direction, fft_shape.fft_x, fft_shape.fft_y,
                         fft_shape.batch if nffts is None else nffts)

    def problems(self):
        """
        Lista as violações dos invariantes da especificação.

        Returns:
            list: Mensagens, vazia quando a especificação é válida
        """
        erros = []
        for nome in ('nx', 'ny', 'ny2', 'nffts', 'idist', 'odist'):
            if getattr(self, nome) < 1:
                erros.append(f"{nome} deve ser positivo ({getattr(self, nome)})")
        if self.ny2 != self.ny // 2 + 1:
            erros.append(f"ny2={self.ny2} difere de ny/2+1={self.ny // 2 + 1}")
        if self.idist != self.ny2 * self.nx:
            erros.append(f"idist={self.idist} difere de ny2*nx={self.ny2 * self.nx}")
        if self.odist != self.ny2 * self.nx:
            erros.append(f"odist={self.odist} difere de ny2*nx={self.ny2 * self.nx}")
        return erros

    def complex_shape(self):
        return (self.nffts, self.nx, self.ny2)

    def real_shape(self):
        """Forma do array real com passo de linha de 2·ny2 reais."""
        return (self.nffts, self.nx, 2 * self.ny2)


@dataclass(frozen=True)
class PlanDescriptor:
    """Descritor no formato das chamadas plan_many (ndim, embed, dist, lote)."""

    ndim: tuple
    inembed: tuple
    onembed: tuple
    idist: int
    odist: int
    nffts: int

    def positive(self):
        valores = self.ndim + self.inembed + self.onembed + (self.idist, self.odist, self.nffts)
        return all(v >= 1 for v in valores)


def describe(spec, sem):
    """
    Monta o descritor sem checar pré-condições (uso interno e mensagens).

    Args:
        spec (LogicalPlanSpec): Especificação lógica
        sem (BackendSemantics): Semântica alvo

    Returns:
        PlanDescriptor: Descritor correspondente
    """
    if sem.rank_order is RankOrder.REVERSED:
        ndim = (spec.ny, spec.nx)
        embed = (spec.ny2, spec.nx)
    else:
        ndim = (spec.nx, spec.ny)
        # só a entrada da dimensão rápida é significativa
        embed = (spec.ny2, spec.ny2)
    return PlanDescriptor(ndim, embed, embed, spec.idist, spec.odist, spec.nffts)


def normalize(spec, sem):
    """
    Traduz a especificação lógica no descritor de uma semântica.

    Natural: ndim=(nx, ny), inembed=onembed=(ny2, ny2).
    Reversed: ndim=(ny, nx), inembed=onembed=(ny2, nx).
    idist, odist e nffts passam sem alteração.

    Args:
        spec (LogicalPlanSpec): Especificação lógica válida
        sem (BackendSemantics): Semântica alvo

    Returns:
        PlanDescriptor: Descritor normalizado

    Raises:
        PreconditionError: Se a especificação violar seus invariantes
    """
    erros = spec.problems()
    if erros:
        logger.error(f"Especificação inválida: {'; '.join(erros)}")
        raise PreconditionError(f"Especificação inválida: {'; '.join(erros)}")
    return describe(spec, sem)


def logical_dims(descriptor, sem):
    """
    Recupera (nx, ny) de um descritor segundo a semântica que o gerou.

    Args:
        descriptor (PlanDescriptor): Descritor
        sem (BackendSemantics): Semântica do descritor

    Returns:
        tuple: (nx, ny)
    """
    if sem.rank_order is RankOrder.REVERSED:
        return descriptor.ndim[1], descriptor.ndim[0]
    return descriptor.ndim[0], descriptor.ndim[1]
