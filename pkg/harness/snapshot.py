"""
Módulo de snapshots do estado (seção io).

Formato (little-endian):
    cabeçalho de 44 bytes: magic b"GBNC", versão (u32), d1..d6 (6 × u32),
    lote (u32), semente (i64); depois F e G como pares (real, imag) de
    reais de 8 bytes e por fim v como reais de 8 bytes.
"""

import struct

import numpy as np

from inputs.grade import GridShape
from kernels.estado import SpectralState
from utils.erros import SnapshotIOError
from utils.logger import setup_logger

logger = setup_logger('harness.snapshot')

MAGIC = b'GBNC'
VERSAO = 1
CABECALHO = struct.Struct('<4sI6IIq')


def io_snapshot(state, path):
    """
    Grava o estado em disco.

    Args:
        state (SpectralState): Estado a gravar
        path (str): Caminho do arquivo

    Returns:
        int: Bytes gravados

    Raises:
        SnapshotIOError: Se o arquivo não puder ser gravado
    """
    cabecalho = CABECALHO.pack(MAGIC, VERSAO, *state.grid.dims(), state.batch, state.seed)
    blocos = (
        cabecalho,
        np.ascontiguousarray(state.F, dtype='<c16').tobytes(),
        np.ascontiguousarray(state.G, dtype='<c16').tobytes(),
        np.ascontiguousarray(state.v, dtype='<f8').tobytes(),
    )
    try:
        with open(path, 'wb') as f:
            for bloco in blocos:
                f.write(bloco)
    except OSError as e:
        logger.error(f"Erro ao gravar snapshot em {path}: {str(e)}")
        raise SnapshotIOError("Falha ao gravar snapshot", path) from e
    return sum(len(bloco) for bloco in blocos)


def read_snapshot(path):
    """
    Lê um snapshot gravado por io_snapshot.

    Args:
        path (str): Caminho do arquivo

    Returns:
        SpectralState: Estado reconstruído

    Raises:
        SnapshotIOError: Se o arquivo não puder ser lido ou estiver corrompido
    """
    try:
        with open(path, 'rb') as f:
            conteudo = f.read()
    except OSError as e:
        logger.error(f"Erro ao ler snapshot {path}: {str(e)}")
        raise SnapshotIOError("Falha ao ler snapshot", path) from e

    if len(conteudo) < CABECALHO.size:
        raise SnapshotIOError("Snapshot truncado", path)
    magic, versao, *dims, lote, semente = CABECALHO.unpack_from(conteudo)
    if magic != MAGIC or versao != VERSAO:
        raise SnapshotIOError(f"Snapshot com magic {magic!r} ou versão {versao} não suportada", path)

    grid = GridShape.of(dims)
    n_planos = lote * grid.d1 * grid.d3
    corpo = memoryview(conteudo)[CABECALHO.size:]
    bytes_planos = 16 * n_planos
    resto = len(corpo) - 2 * bytes_planos
    linha_v = 8 * grid.velocity()
    if resto < 0 or resto % linha_v:
        raise SnapshotIOError("Snapshot com tamanho incompatível com o cabeçalho", path)

    forma = (lote, grid.d1, grid.d3)
    F = np.frombuffer(corpo[:bytes_planos], dtype='<c16').reshape(forma).astype(np.complex128)
    G = np.frombuffer(corpo[bytes_planos:2 * bytes_planos], dtype='<c16').reshape(forma).astype(np.complex128)
    v = np.frombuffer(corpo[2 * bytes_planos:], dtype='<f8').reshape(-1, grid.velocity()).astype(np.float64)
    return SpectralState(grid, F, G, v, semente)
