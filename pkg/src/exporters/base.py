"""
Shared plumbing for the jinja2 report exporters.
"""

from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from src.verify.catalogue import CLAIM_IDS
from src.verify.schemas import VerificationReport


class ReportExporter:
    """Render a VerificationReport through one template in templates/."""

    template_name = ""

    def __init__(self, template_dir: Optional[Path] = None):
        """
        Args:
            template_dir: Directory containing Jinja2 templates
        """
        if template_dir is None:
            project_root = Path(__file__).parent.parent.parent
            template_dir = project_root / "templates"

        self.template_dir = template_dir
        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            autoescape=select_autoescape(['html', 'xml']),
            trim_blocks=True,
            lstrip_blocks=True
        )

    def render(self, report: VerificationReport, title: Optional[str] = None) -> str:
        template = self.env.get_template(self.template_name)
        return template.render(**self._prepare_context(report, title))

    def export(self, report: VerificationReport, output_path: Path, title: Optional[str] = None) -> Path:
        """
        Write the rendered report.

        Returns:
            Path to the generated report
        """
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report, title), encoding="utf-8")
        return output_path

    def _prepare_context(self, report: VerificationReport, title: Optional[str]) -> Dict[str, Any]:
        verdicts: Dict[str, Counter] = {claim_id: Counter() for claim_id in CLAIM_IDS}
        report_only: Dict[str, bool] = {}
        for record in report.claims:
            verdicts.setdefault(record.claim_id, Counter())[record.verdict] += 1
            report_only[record.claim_id] = report_only.get(record.claim_id, False) or record.report_only

        claims: List[Dict[str, Any]] = []
        for claim_id, counts in verdicts.items():
            if not counts:
                continue
            hard_failures = sum(1 for r in report.claims if r.claim_id == claim_id and r.is_hard_failure)
            if hard_failures:
                status = "FAILED"
            elif counts["refuted"]:
                status = "discrepancy"
            else:
                status = "ok"
            claims.append({
                "claim_id": claim_id,
                "confirmed": counts["confirmed"],
                "refuted": counts["refuted"],
                "not_applicable": counts["not-applicable"],
                "report_only": report_only.get(claim_id, False),
                "status": status,
            })

        return {
            "title": title or "Claim verification report",
            "version": report.version,
            "generated_time": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "summary": report.summary,
            "ok": report.ok,
            "claims": claims,
            "hard_failures": [r for r in report.claims if r.is_hard_failure],
            "discrepancies": [r for r in report.claims if r.verdict == "refuted" and r.report_only],
        }
