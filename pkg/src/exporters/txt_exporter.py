"""
Plain text verification report, for terminals and logs without rich text.
"""

from .base import ReportExporter


class TXTExporter(ReportExporter):
    """Export a VerificationReport as a plain text report."""

    template_name = "report.txt.j2"
