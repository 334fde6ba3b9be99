"""
Report Generator Module
Generates HTML and PDF reports from batch runs, benchmarks and surveys.
"""

import html
import json
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional

from modules import logger


class ReportGenerator:
    """Generates run, bench and survey reports in HTML and PDF formats."""

    def __init__(self, output_dir: str = None):
        """
        Initialize report generator.

        Args:
            output_dir: Directory to save reports (default: ~/.strongcolor/reports)
        """
        if output_dir is None:
            output_dir = str(Path.home() / ".strongcolor" / "reports")

        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def generate_run_report(self, run_data: Dict, format: str = "html") -> Optional[str]:
        """
        Generate a batch run report.

        Args:
            run_data: RunReport.to_dict() or {'label', 'summary', 'records'} from the result store
            format: Output format ("html" or "pdf")

        Returns:
            Path to generated report file, or None on failure
        """
        label = run_data.get("label") or "run"
        body = self._generate_summary_html(run_data.get("summary", {}))
        body += self._generate_records_html(run_data.get("records", []))
        return self._write(f"Batch run {label}", body, _slug(label, "run"), format)

    def generate_table_report(self, title: str, rows: List[Dict], format: str = "html") -> Optional[str]:
        """
        Generate a report of uniform rows (bench timings, survey results).

        Returns:
            Path to generated report file, or None on failure
        """
        return self._write(title, self._generate_table_html(rows), _slug(title, "table"), format)

    def _write(self, title: str, body: str, slug: str, format: str) -> Optional[str]:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        html_content = self._generate_html(title, body)
        try:
            html_path = self.output_dir / f"{slug}_{timestamp}.html"
            html_path.write_text(html_content, encoding="utf-8")
            if format == "pdf":
                return str(self._generate_pdf(html_content, slug, timestamp))
            return str(html_path)
        except ImportError as e:
            logger.error(str(e))
            return None
        except Exception as e:
            logger.error(f"Failed to write report {slug}: {e}")
            return None

    def _generate_html(self, title: str, body: str) -> str:
        """Generate HTML report content."""
        generated = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        return f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <title>{html.escape(title)}</title>
    <style>
        body {{
            font-family: -apple-system, BlinkMacSystemFont, 'Segoe UI', Roboto, sans-serif;
            line-height: 1.5;
            color: #333;
            background: #f5f5f5;
            padding: 20px;
        }}

        .container {{
            max-width: 1200px;
            margin: 0 auto;
            background: white;
            padding: 40px;
            border-radius: 8px;
        }}

        h1 {{
            color: #2c3e50;
            border-bottom: 3px solid #3498db;
            padding-bottom: 10px;
        }}

        .metric-grid {{
            display: grid;
            grid-template-columns: repeat(auto-fit, minmax(180px, 1fr));
            gap: 20px;
            margin: 20px 0;
        }}

        .metric-card {{
            background: #f8f9fa;
            padding: 15px;
            border-left: 4px solid #3498db;
        }}

        .metric-card .value {{
            font-size: 1.8em;
            font-weight: bold;
        }}

        table {{
            width: 100%;
            border-collapse: collapse;
            margin: 20px 0;
            font-size: 0.9em;
        }}

        th, td {{
            padding: 6px 10px;
            border-bottom: 1px solid #ecf0f1;
            text-align: left;
        }}

        tr.failed td {{
            background: #fdecea;
        }}
    </style>
</head>
<body>
<div class="container">
    <h1>{html.escape(title)}</h1>
    <p>Generated {generated}</p>
    {body}
</div>
</body>
</html>
"""

    def _generate_summary_html(self, summary: Dict) -> str:
        """Generate summary cards."""
        cards = ""
        for key in ("total", "verified", "exceptional", "errors", "max_colors", "seconds"):
            value = summary.get(key)
            cards += f"""
            <div class="metric-card">
                <h4>{key.replace('_', ' ').title()}</h4>
                <div class="value">{'-' if value is None else html.escape(str(value))}</div>
            </div>"""
        return f'<div class="metric-grid">{cards}</div>'

    def _generate_records_html(self, records: List[Dict]) -> str:
        """Generate the per-graph table."""
        rows = ""
        for r in records:
            tags = " > ".join(t.get("tag", "?") for t in r.get("trace", []) if isinstance(t, dict))
            failed = r.get("error") or not r.get("verified")
            rows += f"""
            <tr class="{'failed' if failed else ''}">
                <td>{html.escape(str(r.get('input_id', '')))}</td>
                <td>{r.get('n', '')}</td>
                <td>{r.get('m', '')}</td>
                <td>{'-' if r.get('colors_used') is None else r.get('colors_used')}</td>
                <td>{'yes' if r.get('exceptional') else ''}</td>
                <td>{'ok' if r.get('verified') else 'FAILED'}</td>
                <td>{float(r.get('seconds') or 0):.4f}</td>
                <td>{html.escape(tags)}</td>
                <td>{html.escape(r.get('error') or '')}</td>
            </tr>"""
        return f"""
        <table>
            <thead>
                <tr>
                    <th>Input</th><th>n</th><th>m</th><th>Colors</th><th>Exceptional</th>
                    <th>Verified</th><th>Seconds</th><th>Cases</th><th>Error</th>
                </tr>
            </thead>
            <tbody>
                {rows if rows else "<tr><td colspan='9'>No records</td></tr>"}
            </tbody>
        </table>
        """

    def _generate_table_html(self, rows: List[Dict]) -> str:
        """Generate a table with one column per key of the first row."""
        if not rows:
            return "<p>No rows</p>"
        columns = list(rows[0].keys())
        head = "".join(f"<th>{html.escape(c)}</th>" for c in columns)
        body = ""
        for row in rows:
            cells = ""
            for c in columns:
                value = row.get(c)
                if isinstance(value, (list, dict)):
                    value = json.dumps(value)
                cells += f"<td>{html.escape('-' if value is None else str(value))}</td>"
            body += f"<tr>{cells}</tr>"
        return f"<table><thead><tr>{head}</tr></thead><tbody>{body}</tbody></table>"

    def _generate_pdf(self, html_content: str, slug: str, timestamp: str) -> Path:
        """
        Render HTML to PDF with WeasyPrint.

        Returns:
            Path to PDF file
        """
        try:
            from weasyprint import HTML
        except ImportError:
            raise ImportError(
                "WeasyPrint not installed. Install with: pip install weasyprint"
            )

        pdf_path = self.output_dir / f"{slug}_{timestamp}.pdf"
        HTML(string=html_content).write_pdf(str(pdf_path))
        return pdf_path


def _slug(text: str, default: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in text.lower()).strip("_") or default
