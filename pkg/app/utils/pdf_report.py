import logging
import os

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.platypus import PageBreak, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

logger = logging.getLogger(__name__)


def _safe_text(x):
    if x is None:
        return ""
    # Paragraph parses a small XML dialect
    return str(x).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def generate_suite_pdf(report, output_pdf_path: str):
    """
    Writes a verification suite run to PDF:
    - Run header
    - Summary table (one row per check)
    - Per-check details
    - Closing note on exactness
    """
    out_dir = os.path.dirname(output_pdf_path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)

    styles = getSampleStyleSheet()
    story = []

    doc = SimpleDocTemplate(
        output_pdf_path,
        pagesize=A4,
        rightMargin=30,
        leftMargin=30,
        topMargin=30,
        bottomMargin=30,
    )

    # -----------------------------
    # Header
    # -----------------------------
    story.append(Paragraph("Seshadri Constants: Verification Suite", styles["Title"]))
    story.append(Spacer(1, 8))

    meta = [
        ["Run ID", _safe_text(report.run_id)],
        ["Created At", _safe_text(report.created_at)],
        ["Checks", str(len(report.results))],
        ["Outcome", "PASS" if report.passed else "FAIL"],
    ]
    t = Table(meta, colWidths=[140, 360])
    t.setStyle(
        TableStyle(
            [
                ("BACKGROUND", (0, 0), (0, -1), colors.lightgrey),
                ("GRID", (0, 0), (-1, -1), 0.25, colors.grey),
                ("VALIGN", (0, 0), (-1, -1), "TOP"),
                ("FONTNAME", (0, 0), (-1, -1), "Helvetica"),
                ("FONTSIZE", (0, 0), (-1, -1), 9),
            ]
        )
    )
    story.append(t)
    story.append(Spacer(1, 14))

    # -----------------------------
    # Summary
    # -----------------------------
    story.append(Paragraph("Summary", styles["Heading2"]))
    rows = [["#", "Check", "Status", "Seconds"]]
    for i, r in enumerate(report.results, start=1):
        rows.append([str(i), r.name, "PASS" if r.passed else "FAIL", f"{r.seconds:.2f}"])

    table = Table(rows, colWidths=[25, 300, 70, 70])
    style = [
        ("BACKGROUND", (0, 0), (-1, 0), colors.darkblue),
        ("TEXTCOLOR", (0, 0), (-1, 0), colors.white),
        ("GRID", (0, 0), (-1, -1), 0.25, colors.grey),
        ("VALIGN", (0, 0), (-1, -1), "TOP"),
        ("FONTSIZE", (0, 0), (-1, -1), 8),
    ]
    for i, r in enumerate(report.results, start=1):
        if not r.passed:
            style.append(("TEXTCOLOR", (2, i), (2, i), colors.red))
    table.setStyle(TableStyle(style))
    story.append(table)

    # -----------------------------
    # Details
    # -----------------------------
    story.append(PageBreak())
    story.append(Paragraph("Check Details", styles["Heading1"]))
    story.append(Spacer(1, 8))
    for r in report.results:
        story.append(Paragraph(f"<b>{_safe_text(r.name)}</b>: {_safe_text(r.title)}", styles["Heading3"]))
        story.append(Paragraph(f"<b>Status:</b> {'PASS' if r.passed else 'FAIL'}", styles["BodyText"]))
        story.append(Paragraph(_safe_text(r.detail) or "No detail recorded.", styles["BodyText"]))
        story.append(Spacer(1, 8))

    # -----------------------------
    # Note
    # -----------------------------
    story.append(Spacer(1, 12))
    story.append(Paragraph("Note", styles["Heading2"]))
    story.append(
        Paragraph(
            "Every value and comparison in this report is exact rational arithmetic. "
            "Decimal figures, where shown, are approximations for reading only.",
            styles["BodyText"],
        )
    )

    doc.build(story)
    logger.info("suite PDF written to %s", output_pdf_path)
    return output_pdf_path
