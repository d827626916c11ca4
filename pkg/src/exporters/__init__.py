"""
Exporters for verification reports and result tables.

Supported formats:
- Markdown: per-claim tables and the discrepancy list
- TXT: plain text for terminals and logs
- CSV: fixed column orders for tables, bonding profiles and reports
"""

from .csv_writer import BONDING_COLUMNS, REPORT_COLUMNS, TABLE_COLUMNS, write_report, write_rows
from .markdown_exporter import MarkdownExporter
from .txt_exporter import TXTExporter

__all__ = [
    "BONDING_COLUMNS",
    "REPORT_COLUMNS",
    "TABLE_COLUMNS",
    "write_report",
    "write_rows",
    "MarkdownExporter",
    "TXTExporter",
]
