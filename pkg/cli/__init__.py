"""
Pacote da linha de comando da bancada CGYRO.
"""

__version__ = '1.0.0'
