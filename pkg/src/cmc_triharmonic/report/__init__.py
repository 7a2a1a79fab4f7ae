from cmc_triharmonic.report.report import RunReport, render, render_json, render_text
from cmc_triharmonic.report.scan import (
    CSV_HEADER, ParamRange, ScanResult, ScanRow, read_csv, render_csv,
    render_scan_json, run_scan,
)
