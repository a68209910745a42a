"""Experiment command: kappa over a grid of Reiffen curves"""
import asyncio
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Dict, List, Optional, Tuple

from annihilator.curve import reiffen
from annihilator.kappa import kappa_and_annihilator
from core.config import KappaConfig
from core.errors import DModError, ReiffenParameterError
from core.logging_config import get_logger
from utils.report_formatter import ReportFormatter
from .base import Command
from .registry import register

logger = get_logger("commands.experiment")


def run_cell(p: int, q: int, max_d: Optional[int] = None, reuse: Optional[bool] = None,
             point: Optional[Tuple] = None) -> Dict[str, Any]:
    """kappa for f_{p,q}; module level so worker processes can unpickle it"""
    row: Dict[str, Any] = {"p": p, "q": q, "kappa": None, "m_trace": [], "ms_per_d": [], "timings_ms": {},
                           "error": None}
    try:
        config = KappaConfig.from_env(max_d=max_d, point=point, reuse_syzygies=reuse)
        result = kappa_and_annihilator(reiffen(p, q), config)
    except DModError as e:
        logger.warning(f"f_{{{p},{q}}}: {e.message}")
        row["error"] = e.to_error_dict()
        return row
    except Exception as e:
        logger.error(f"f_{{{p},{q}}}: internal error: {e}", exc_info=True)
        row["error"] = {"code": 1, "message": f"internal error: {e}"}
        return row
    row["kappa"] = result.kappa
    row["m_trace"] = result.m_trace
    row["ms_per_d"] = [round(ms, 3) for ms in result.d_timings_ms]
    row["timings_ms"] = result.timings_ms
    return row


@dataclass
class ExperimentTable:
    """Cells of a p x q grid, kept sorted by (p, q)"""

    rows: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, row: Dict[str, Any]) -> None:
        self.rows.append(row)
        self.rows.sort(key=lambda r: (r["p"], r["q"]))

    @property
    def failures(self) -> int:
        return sum(1 for r in self.rows if r["error"])

    def to_dict(self) -> Dict[str, Any]:
        return {"rows": self.rows}


@register
class ExperimentCommand(Command):
    """Run kappa for f_{p,q} over a range of p and q offsets"""

    name = "experiment"
    description = "kappa(f_{p,q}^-1) for p in --p-range and q = p + k, k in --q-offset"
    flags = ("p_range", "q_offset", "max_d", "point", "jobs", "json", "reuse")

    async def execute(self) -> Dict[str, Any]:
        cells = [(p, p + k) for p in self.run.p_values for k in self.run.q_offsets]
        for p, q in cells:
            if p < 4:
                raise ReiffenParameterError(p, q)

        task = partial(_cell_task, max_d=self.run.max_d, reuse=self.run.reuse_syzygies,
                       point=self.run.point)
        table = ExperimentTable()
        logger.info(f"experiment: {len(cells)} cells, jobs={self.run.jobs}")

        if self.context.executor is not None and self.run.jobs > 1:
            loop = asyncio.get_running_loop()
            rows = await asyncio.gather(*[
                loop.run_in_executor(self.context.executor, task, cell) for cell in cells
            ])
        else:
            rows = [task(cell) for cell in cells]

        for row in rows:
            table.add(row)
        if table.failures:
            logger.warning(f"experiment: {table.failures} of {len(cells)} cells failed")
        return {"success": True, "result": table.to_dict(),
                "text": ReportFormatter.experiment(table.rows)}


def _cell_task(cell: Tuple[int, int], max_d=None, reuse=None, point=None) -> Dict[str, Any]:
    return run_cell(cell[0], cell[1], max_d=max_d, reuse=reuse, point=point)
