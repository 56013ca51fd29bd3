"""
Módulo do kernel não linear (seção nl).

Calcula o colchete de Poisson {F, G} = ∂x F·∂y G − ∂y F·∂x G de cada
membro do lote pelo método pseudo-espectral: derivadas espectrais,
preenchimento de dealiasing, quatro FFTs C2R, produtos ponto a ponto, uma
FFT R2C e truncamento. As extensões 3/2 (radial) e 3 (toroidal) eliminam o
aliasing dos modos retidos.
"""

from dataclasses import dataclass

from fftplan.dealias import dealias_pad, radial_wavenumbers, toroidal_wavenumbers, truncate
from fftplan.especificacao import Direction, LogicalPlanSpec
from fftplan.plano import PlanHandle, execute_c2r, execute_r2c, plan
from inputs.grade import FftShape, GridShape, derive_fft_shape
from utils.erros import ExecutionError
from utils.logger import setup_logger

logger = setup_logger('kernels.nl')


@dataclass(frozen=True)
class NlPlans:
    """Par de planos C2R/R2C para uma grade e um tamanho de partição."""

    grid: GridShape
    fft_shape: FftShape
    c2r: PlanHandle
    r2c: PlanHandle

    @property
    def nffts(self):
        return self.c2r.spec.nffts


def build_nl_plans(grid, sem, backend=None, nffts=None):
    """
    Planeja as transformadas do kernel nl.

    Args:
        grid (GridShape): Grade da entrada
        sem (BackendSemantics): Semântica de planejamento
        backend (FftBackend): Backend; o de referência por padrão
        nffts (int): Membros por partição; o lote inteiro por padrão

    Returns:
        NlPlans: Planos prontos para reutilização
    """
    fft_shape = derive_fft_shape(grid)
    c2r = plan(LogicalPlanSpec.from_fft_shape(fft_shape, Direction.C2R, nffts), sem, backend)
    r2c = plan(LogicalPlanSpec.from_fft_shape(fft_shape, Direction.R2C, nffts), sem, backend)
    return NlPlans(grid, fft_shape, c2r, r2c)


def poisson_bracket(F, G, plans):
    """
    Colchete de Poisson desaliasado de dois conjuntos de planos.

    Args:
        F (numpy.ndarray): Modos [nb × d1 × d3]
        G (numpy.ndarray): Modos [nb × d1 × d3]
        plans (NlPlans): Planos com nffts = nb

    Returns:
        numpy.ndarray: Modos de {F, G} [nb × d1 × d3], linha de Nyquist
            radial zerada

    Raises:
        ExecutionError: Se as formas não corresponderem aos planos
    """
    grid = plans.grid
    esperado = (plans.nffts, grid.d1, grid.d3)
    if F.shape != esperado or G.shape != esperado:
        logger.error(f"Formas {F.shape}/{G.shape} incompatíveis com os planos {esperado}")
        raise ExecutionError(f"Formas {F.shape}/{G.shape} incompatíveis com os planos {esperado}")

    kx = radial_wavenumbers(grid.d1)[:, None]
    ky = toroidal_wavenumbers(grid.d3)[None, :]
    ny = plans.fft_shape.fft_y

    def real(modos):
        return execute_c2r(plans.c2r, dealias_pad(modos, grid, plans.fft_shape))[..., :ny]

    fx = real(1j * kx * F)
    fy = real(1j * ky * F)
    gx = real(1j * kx * G)
    gy = real(1j * ky * G)

    produto = fx * gy - fy * gx
    espectro = execute_r2c(plans.r2c, produto) / (plans.fft_shape.fft_x * ny)
    colchete = truncate(espectro, grid, plans.fft_shape)
    colchete[..., grid.d1 // 2, :] = 0.0
    return colchete


def nl_step(state, plans, dt):
    """
    Passo explícito F ← F + dt·{F, G} sobre o lote inteiro.

    Args:
        state (SpectralState): Estado atual
        plans (NlPlans): Planos para o lote inteiro
        dt (float): Passo de tempo

    Returns:
        numpy.ndarray: Novo F
    """
    return state.F + dt * poisson_bracket(state.F, state.G, plans)
