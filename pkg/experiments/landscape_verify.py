"""
experiments/landscape_verify.py

Checks on the expected landscape: criticality and curvature of the catalogued
points, the sampled region covering, Hessian concentration for growing m and the
injectivity margin of a Gaussian ensemble.
"""

from typing import Any, Dict

import numpy as np

from data.synthetic import random_unit_signal
from landscape.concentration import hessian_concentration, injectivity_margin
from landscape.critical_points import critical_catalogue, sample_saddle_points
from landscape.regions import verify_covering
from objective.expected_model import ExpectedModel, expected_grad, expected_hessian
from persistence.traces import write_summary_json
from sensing.gaussian_ensemble import gaussian_ensemble
from utils.helpers import derive_seed
from .base_experiment import BaseExperiment
from .reporting import emit_key_values


def catalogue_report(truth: np.ndarray, eps_mean: float, saddle_samples: int,
                     seed: int) -> Dict[str, Any]:
    catalogue = critical_catalogue(truth, eps_mean)
    model = ExpectedModel(truth=truth, noise_mean=eps_mean)
    truth_sq = float(np.dot(truth, truth))
    saddles = sample_saddle_points(catalogue, saddle_samples, seed)

    grad_norms = [float(np.linalg.norm(expected_grad(model, catalogue.origin)))]
    grad_norms += [float(np.linalg.norm(expected_grad(model, x))) for x in catalogue.minimizers]
    grad_norms += [float(np.linalg.norm(expected_grad(model, x))) for x in saddles]

    origin_eigs = np.linalg.eigvalsh(expected_hessian(model, catalogue.origin))
    minimizer_min = min(float(np.linalg.eigvalsh(expected_hessian(model, x))[0])
                        for x in catalogue.minimizers)
    saddle_mixed = all(
        eigs[0] < 0 < eigs[-1]
        for eigs in (np.linalg.eigvalsh(expected_hessian(model, x)) for x in saddles)
    )
    return {
        "max_grad_norm": max(grad_norms),
        "origin_negative_definite": bool(origin_eigs[-1] < 0),
        "minimizer_min_eigenvalue": minimizer_min,
        "minimizer_curvature_ok": bool(minimizer_min >= 2.0 * truth_sq - 1e-9),
        "saddles_mixed_signature": bool(saddle_mixed),
    }


class LandscapeVerifyExperiment(BaseExperiment):
    name = "landscape-verify"

    async def execute(self) -> Dict[str, Any]:
        cfg = self.config
        section = cfg.landscape
        n = section.n
        truth = random_unit_signal(n, derive_seed(cfg.seed, "truth"), norm=cfg.problem.signal_norm)

        report: Dict[str, Any] = {"n": n, "lambda": section.lam, "eps_mean": section.eps_mean}
        report["catalogue"] = catalogue_report(truth, section.eps_mean, section.saddle_samples,
                                               derive_seed(cfg.seed, "samples", 1))

        covering = verify_covering(truth, section.eps_mean, section.lam, section.samples,
                                   derive_seed(cfg.seed, "samples", 2))
        report["covering"] = covering.to_dict()

        concentration = {}
        for factor in section.m_factors:
            ratios = hessian_concentration(n, factor * n, section.concentration_trials, cfg.seed,
                                           points=section.points, noise_mean=section.eps_mean)
            concentration[str(factor)] = float(np.median(ratios))
        report["hessian_concentration"] = concentration

        E = gaussian_ensemble(n, section.m_factors[0] * n, derive_seed(cfg.seed, "ensemble"))
        report["injectivity_margin"] = injectivity_margin(E)

        write_summary_json(report, self.output_dir / "landscape_report.json")
        emit_key_values(report)
        self.log_action("finished", {"uncovered": covering.uncovered_count})
        return report
