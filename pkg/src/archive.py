import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

import yaml

from .corpus import save_graph
from .graph_core import Graph
from .models import DisagreementRecord, MiningReport

logger = logging.getLogger(__name__)

RECORDS_FILE = "disagreements.jsonl"
SUMMARY_FILE = "report.yaml"
REPORT_FILE = "report.json"


class DisagreementArchive:
    """Store heuristic/oracle disagreements as graph6 pairs plus JSON-lines records"""

    def __init__(self, base_path: Path):
        self.base_path = Path(base_path)
        self.records_file = self.base_path / RECORDS_FILE

    def prepare(self):
        """Create the directory and start an empty record file"""
        self.base_path.mkdir(parents=True, exist_ok=True)
        self.records_file.write_text("", encoding="utf-8")

    def pair_paths(self, trial: int) -> Tuple[Path, Path]:
        stem = f"trial-{trial:06d}"
        return self.base_path / f"{stem}-left.g6", self.base_path / f"{stem}-right.g6"

    def save_disagreement(self, record: DisagreementRecord, left: Graph, right: Graph) -> Path:
        left_path, right_path = self.pair_paths(record.trial)
        save_graph(left, left_path, "g6")
        save_graph(right, right_path, "g6")
        with open(self.records_file, "a", encoding="utf-8") as f:
            f.write(record.model_dump_json() + "\n")
        logger.info(f"Archived disagreement for trial {record.trial} to {left_path.parent}")
        return left_path

    def save_report(self, report: MiningReport):
        with open(self.base_path / REPORT_FILE, "w", encoding="utf-8") as f:
            f.write(report.model_dump_json(indent=2))
        with open(self.base_path / SUMMARY_FILE, "w", encoding="utf-8") as f:
            yaml.safe_dump(report.summary(), f, default_flow_style=False, sort_keys=False)

    def load_records(self) -> List[DisagreementRecord]:
        if not self.records_file.exists():
            raise FileNotFoundError(f"No {RECORDS_FILE} in {self.base_path}")
        records = []
        with open(self.records_file, "r", encoding="utf-8") as f:
            for line_no, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    records.append(DisagreementRecord.model_validate(json.loads(line)))
                except ValueError as e:
                    raise ValueError(f"{self.records_file}:{line_no}: {e}") from e
        return records

    def load_summary(self) -> Optional[dict]:
        summary_path = self.base_path / SUMMARY_FILE
        if not summary_path.exists():
            return None
        with open(summary_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
