import argparse
import asyncio
import logging
import sys
from typing import List, Optional

from config import MirrorPRConfig
from experiments import AVAILABLE_EXPERIMENTS, get_experiment
from experiments.config_schema import ConfigError, ExperimentConfig, load_config
from experiments.orchestrator import ExperimentOrchestrator
from persistence import get_run_ledger
from solvers.base_solver import SolverError
from spectral.power_iteration import SpectralInitError
from utils.logging_config import setup_logging
from utils.validators import ValidationError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


# Main application class
class MirrorPRApp:
    """Command-line experiment runner"""

    def __init__(self, config: Optional[MirrorPRConfig] = None, ledger_path: Optional[str] = None):
        self.config = config or MirrorPRConfig()
        self.ledger_path = ledger_path
        self.logger = logging.getLogger("app")
        self.setup_components()

    def setup_components(self):
        """Initialize the ledger and the orchestrator"""
        path = self.ledger_path or self.config.LEDGER_PATH
        if not path and self.config.ENABLE_LEDGER:
            path = f"{self.config.OUTPUT_DIR}/ledger.db"
        self.ledger = get_run_ledger(path) if path else None

        self.orchestrator = ExperimentOrchestrator(
            max_workers=self.config.MAX_WORKERS,
            ledger=self.ledger,
        )

    async def run_experiment(self, experiment_config: ExperimentConfig):
        experiment = get_experiment(
            experiment_config.experiment,
            experiment_config,
            ledger=self.ledger,
            runtime=self.config,
        )
        return await self.orchestrator.run(experiment)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirror-pr",
        description="Phase retrieval experiments with quartic-entropy mirror descent.",
    )
    parser.add_argument("experiment", choices=sorted(AVAILABLE_EXPERIMENTS))
    parser.add_argument("--config", default=None, help="experiment configuration file")
    parser.add_argument("--seed", type=int, default=None, help="override [experiment] seed")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--ledger", default=None, help="SQLite run ledger path")
    parser.add_argument("--log-level", default=None, help="logging level (default from environment)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    runtime = MirrorPRConfig()
    setup_logging(args.log_level or runtime.LOG_LEVEL)
    logger = logging.getLogger("app")

    try:
        experiment_config = load_config(args.config, args.experiment, seed=args.seed, output_path=args.out)
        app = MirrorPRApp(runtime, ledger_path=args.ledger)
        asyncio.run(app.run_experiment(experiment_config))
    except (ConfigError, ValidationError) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except (SolverError, SpectralInitError) as e:
        logger.error(f"Numerical abort: {e}")
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
