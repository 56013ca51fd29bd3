"""
Exceções da bancada CGYRO.

Cada erro herda de BenchmarkError e também da exceção embutida
correspondente, para que quem chama possa capturar qualquer uma das duas.
"""


class BenchmarkError(Exception):
    """Raiz de todos os erros do projeto."""


class PreconditionError(BenchmarkError, ValueError):
    """Pré-condição de uma operação violada pelos argumentos."""


class ScaleError(PreconditionError):
    """Fator de escala que produz uma dimensão não inteira ou inválida."""

    def __init__(self, mensagem, dimensao):
        super().__init__(mensagem)
        self.dimensao = dimensao


class ByteCountOverflowError(BenchmarkError, OverflowError):
    """Contagem de bytes que não cabe em um inteiro de 64 bits com sinal."""


class InputFileError(BenchmarkError, ValueError):
    """Arquivo de entrada no estilo CGYRO (CHAVE=VALOR) malformado."""

    def __init__(self, mensagem, caminho=None, linha=None):
        prefixo = f"{caminho}:{linha}: " if caminho and linha else ""
        super().__init__(prefixo + mensagem)
        self.caminho = caminho
        self.linha = linha


class PlanningError(BenchmarkError, RuntimeError):
    """Falha ao planejar uma FFT em lote; carrega o descritor envolvido."""

    def __init__(self, mensagem, descriptor=None):
        super().__init__(mensagem)
        self.descriptor = descriptor


class ExecutionError(BenchmarkError, RuntimeError):
    """Dados incompatíveis com o plano (ou kernel) no momento da execução."""


class MemoryBudgetError(BenchmarkError, RuntimeError):
    """Estimativa de memória acima do orçamento configurado."""

    def __init__(self, estimativa, orcamento):
        super().__init__(
            f"Constantes de colisão exigem {estimativa} bytes "
            f"({estimativa / 2**30:.1f} GiB), acima do orçamento de "
            f"{orcamento} bytes ({orcamento / 2**30:.1f} GiB)"
        )
        self.estimativa = estimativa
        self.orcamento = orcamento


class SnapshotIOError(BenchmarkError, OSError):
    """Falha de leitura ou escrita de arquivo; carrega o caminho."""

    def __init__(self, mensagem, caminho):
        super().__init__(f"{mensagem}: {caminho}")
        self.caminho = caminho


class DataError(BenchmarkError, ValueError):
    """Registro de tempo inválido em um arquivo de dados."""

    def __init__(self, mensagem, caminho=None, linha=None):
        partes = [str(p) for p in (caminho, linha) if p is not None]
        prefixo = ":".join(partes) + ": " if partes else ""
        super().__init__(prefixo + mensagem)
        self.caminho = caminho
        self.linha = linha


class ReportError(BenchmarkError, ValueError):
    """Comparação impossível: baseline ausente ou entradas misturadas."""
