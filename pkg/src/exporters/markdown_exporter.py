"""
Markdown verification report.
"""

from typing import Any, Dict, Optional

from src.verify.schemas import VerificationReport

from .base import ReportExporter


class MarkdownExporter(ReportExporter):
    """Export a VerificationReport as Markdown with per-claim tables."""

    template_name = "report.md.j2"

    def _prepare_context(self, report: VerificationReport, title: Optional[str]) -> Dict[str, Any]:
        context = super()._prepare_context(report, title)
        # table cells must not break the pipe syntax
        context["escape_cell"] = lambda value: str(value).replace("|", "\\|")
        return context
