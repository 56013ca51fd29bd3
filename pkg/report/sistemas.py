"""
Módulo de descrição dos sistemas HPC avaliados.

Cada partição registra o processador, a contagem por nó, o pico, a
memória, a rede e a biblioteca de FFT usada, de onde sai a semântica de
planejamento correspondente.
"""

from dataclasses import dataclass

from fftplan.especificacao import semantics_for_library


@dataclass(frozen=True)
class HpcSystem:
    """Partição de um sistema HPC com um tipo de processador."""

    chave: str
    particao: str
    processador: str
    por_no: int
    logicos_por_no: int
    pico_tflops: float
    pico_por_processador: bool
    banda_memoria_tbps: float
    memoria_gb: int
    rede_por_no: str
    biblioteca_fft: str

    @property
    def semantics(self):
        return semantics_for_library(self.biblioteca_fft)

    def resumo(self):
        """Linha descritiva usada por `list --systems`."""
        pico = f"{self.pico_tflops:g} TFLOPs" + ("/proc" if self.pico_por_processador else "")
        return (
            f"{self.chave:<9} {self.particao:<17} {self.processador:<22} "
            f"{self.por_no} ({self.logicos_por_no} lógicos)/nó  {pico:<15} "
            f"{self.banda_memoria_tbps:g} TBps, {self.memoria_gb} GB  {self.rede_por_no:<10} "
            f"{self.biblioteca_fft} [{self.semantics.name}]"
        )


_SISTEMAS = (
    HpcSystem('max1550', 'Stampede3 pvc', 'Intel Max 1550 GPU', 4, 8, 52, True, 3.2, 128,
              '1x100 Gbps', 'oneMKL'),
    HpcSystem('max9480', 'Stampede3 spr', 'Intel Max 9480 CPU', 2, 8, 2.3, True, 1.6, 64,
              '1x100 Gbps', 'MKL'),
    HpcSystem('a100-80g', 'Perlmutter gpu80', 'NVIDIA A100 80GB', 4, 4, 9.7, False, 2.0, 80,
              '4x200 Gbps', 'cuFFT'),
    HpcSystem('a100-40g', 'Perlmutter gpu', 'NVIDIA A100 40GB', 4, 4, 9.7, False, 1.6, 40,
              '4x200 Gbps', 'cuFFT'),
    HpcSystem('mi250x', 'Frontier', 'AMD MI250X GPU', 4, 8, 48, True, 3.2, 128,
              '4x200 Gbps', 'hipFFT'),
)


def systems():
    """
    Retorna as cinco partições avaliadas.

    Returns:
        list: Lista de HpcSystem
    """
    return list(_SISTEMAS)


def system_for_key(chave):
    """Partição pela chave curta (ex.: 'mi250x'), ou None."""
    for sistema in _SISTEMAS:
        if sistema.chave == str(chave).lower():
            return sistema
    return None
