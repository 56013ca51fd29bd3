"""
Pacote de relatórios da bancada CGYRO.

Este pacote lê registros de tempo (do harness ou do conjunto publicado
embutido), calcula desempenho relativo por conjunto de seções e emite as
tabelas em texto, dsv ou svg.
"""

from report.analise import (Normalization, SectionSet, builtin_sets, figure_table,
                            find_baseline, parse_section_set, relative_performance,
                            section_breakdown, total_time)
from report.emissor import EmissorTabelas, emit
from report.ingestao import ValidadorRegistros, average_records, ingest
from report.registros import TimingRecord, bundled_dataset, record_key, records_to_frame
from report.sistemas import HpcSystem, system_for_key, systems

__version__ = '1.0.0'

__all__ = [
    'EmissorTabelas', 'HpcSystem', 'Normalization', 'SectionSet', 'TimingRecord',
    'ValidadorRegistros', 'average_records', 'builtin_sets', 'bundled_dataset',
    'emit', 'figure_table', 'find_baseline', 'ingest', 'parse_section_set',
    'record_key', 'records_to_frame', 'relative_performance', 'section_breakdown',
    'system_for_key', 'systems', 'total_time',
]
