"""
Pacote de utilitários compartilhados da bancada CGYRO.

Este pacote contém configuração, logging, exceções e a mensageria em
processo usada pelos workers do harness.
"""

__version__ = '1.0.0'
