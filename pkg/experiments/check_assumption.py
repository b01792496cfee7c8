from typing import Any, Dict

from data.synthetic import random_unit_signal
from landscape.assumptions import AssumptionError, convergence_params, empirical_snr, snr_check
from persistence.traces import write_summary_json
from sensing.gaussian_ensemble import gaussian_ensemble
from sensing.measurements import measure
from utils.helpers import derive_seed
from .base_experiment import BaseExperiment, noise_spec
from .reporting import emit_key_values


class CheckAssumptionExperiment(BaseExperiment):
    """Evaluate the SNR assumption for the configured noise and, when it holds, the rate constants."""

    name = "check-assumption"

    async def execute(self) -> Dict[str, Any]:
        cfg = self.config
        n = cfg.problem.n
        m = cfg.measurement_count()
        truth = random_unit_signal(n, derive_seed(cfg.seed, "truth"), norm=cfg.problem.signal_norm)
        E = gaussian_ensemble(n, m, derive_seed(cfg.seed, "ensemble"))
        M = measure(E, truth, noise_spec(cfg.noise, derive_seed(cfg.seed, "noise")))

        report = snr_check(truth, M.noise, cfg.landscape.lam)
        result: Dict[str, Any] = report.to_dict()
        result["empirical_snr"] = empirical_snr(M)
        if report.passed:
            try:
                params = convergence_params(truth, M.noise, cfg.landscape.lam, cfg.landscape.varrho,
                                            cfg.solver.kappa, m)
                result["params"] = params.to_dict()
            except AssumptionError as e:
                self.logger.warning(f"Convergence parameters unavailable: {e}")

        write_summary_json(result, self.output_dir / "snr_report.json")
        emit_key_values(result)
        return result
