"""
experiments/orchestrator.py

Runs experiments, fans independent work items out to worker threads and
records finished runs in the ledger.
"""

import asyncio
from datetime import datetime
from typing import Any, Callable, Dict, Iterable, List, Optional

from persistence.run_ledger import RunLedger
from utils.helpers import config_digest
from utils.logging_config import get_logger


class ExperimentOrchestrator:
    """Coordinates experiment execution and parallel work items."""

    def __init__(self, max_workers: int = 4, ledger: Optional[RunLedger] = None):
        self.max_workers = max(1, int(max_workers))
        self.ledger = ledger
        self.logger = get_logger("orchestrator")

    async def parallel_map(self, func: Callable[[Any], Any], items: Iterable[Any]) -> List[Any]:
        """Apply a blocking ``func`` to every item on worker threads; results keep input order."""
        semaphore = asyncio.Semaphore(self.max_workers)

        async def run_one(item):
            async with semaphore:
                return await asyncio.to_thread(func, item)

        return list(await asyncio.gather(*(run_one(item) for item in items)))

    async def run(self, experiment) -> Dict[str, Any]:
        """
        Execute one experiment.

        1. Run the experiment
        2. Record the run in the ledger
        3. Return the summary
        """
        name = experiment.name
        self.logger.info(f"Starting experiment {name}")
        started = datetime.now().isoformat()
        try:
            summary = await experiment.execute()
        except Exception as e:
            self.logger.error(f"Experiment {name} failed: {str(e)}", exc_info=True)
            self._store(experiment, started, {"error": str(e)}, status="failed")
            raise

        self._store(experiment, started, summary, status="completed")
        self.logger.info(f"Experiment {name} completed")
        return summary

    def _store(self, experiment, started: str, summary: Dict[str, Any], status: str):
        if self.ledger is None:
            return
        cfg = experiment.config
        self.ledger.store_run({
            "timestamp": started,
            "experiment": experiment.name,
            "seed": cfg.seed,
            "config_digest": config_digest(cfg.model_dump()),
            "output_path": str(experiment.output_dir),
            "summary": summary,
            "status": status,
        })
