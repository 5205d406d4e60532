"""Maximum-likelihood estimation of the power-law exponent.

The per-datum log-likelihood is smooth and concave in beta, so a bounded
derivative-free scalar maximizer (Brent with golden-section fallback)
finds the unique maximum.
"""

from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from .distribution import check_identifiable, log_likelihood, sigma_beta
from .errors import ConvergenceError


@dataclass(frozen=True)
class MleConfig:
    beta_init: float = 1.0
    beta_tol: float = 1e-6
    beta_bounds: tuple = (1e-4, 50.0)
    max_iter: int = 10_000

    def __post_init__(self):
        lo, hi = self.beta_bounds
        if not (0 < lo < hi):
            raise ValueError(f"bounds must be ordered and positive, got {self.beta_bounds}")
        if not self.beta_tol > 0:
            raise ValueError("beta_tol must be positive")
        if not lo <= self.beta_init <= hi:
            raise ValueError("beta_init must lie inside beta_bounds")


DEFAULT_MLE_CONFIG = MleConfig()


@dataclass(frozen=True)
class MleResult:
    beta_emp: float
    sigma: float
    loglik_at_max: float
    iterations: int
    converged: bool


def fit_beta(stat, a, config=DEFAULT_MLE_CONFIG):
    """Maximize the log-likelihood over beta for a fixed cutoff.

    Parameters
    ----------
    stat : SufficientStat
        From the sample truncated at ``a``.
    a : int
        Lower cutoff.
    config : MleConfig

    Returns
    -------
    MleResult

    Raises
    ------
    DegenerateDataError
        If the data cannot identify beta (tail too small, or all data
        equal to the cutoff so the likelihood is unbounded).
    ConvergenceError
        If the maximizer exhausts its budget or the maximum sits at a
        search bound (a bound hit is reported, never silently clamped).
    """
    check_identifiable(stat, a)
    lo, hi = config.beta_bounds

    # Solve to a quarter of the contract tolerance so that
    # l(beta_emp) >= l(beta_emp +- beta_tol) holds with margin.
    objective = lambda beta: -log_likelihood(stat, a, beta)
    res = minimize_scalar(
        objective,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 0.25 * config.beta_tol, "maxiter": config.max_iter},
    )
    if not res.success:
        raise ConvergenceError(
            f"no convergence within {config.max_iter} iterations: {res.message}"
        )
    beta = float(res.x)
    guard = 10.0 * config.beta_tol
    if beta <= lo + guard or beta >= hi - guard:
        raise ConvergenceError(
            f"maximum at search bound (beta={beta:.6g}, bounds={config.beta_bounds})"
        )
    return MleResult(
        beta_emp=beta,
        sigma=sigma_beta(beta, stat.n_a),
        loglik_at_max=-float(res.fun),
        iterations=int(res.nfev),
        converged=True,
    )
