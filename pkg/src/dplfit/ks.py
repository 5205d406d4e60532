"""Kolmogorov-Smirnov distance and Monte Carlo p-value aggregation."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class KsResult:
    d: float
    argmax_n: int


@dataclass(frozen=True)
class PValue:
    p: float
    sigma_p: float
    n_sim: int
    n_exceed: int


def ks_statistic(sample, model):
    """sup_n |N_n/N_a - S(n)| over real n >= a, for a sample truncated at a.

    Both the empirical survival N_n/N_a and the model survival S(n) are
    constant on every interval (m, m+1] between integers, so the supremum
    over all real n is attained on integers; and between consecutive
    observed values the empirical side is flat while S decreases, so it
    suffices to evaluate at each distinct observed value v, at v+1, and
    at the cutoff itself.  Ties in the argmax go to the smallest n.
    """
    values = sample.values
    if values[0] < model.a:
        raise ValueError(
            f"sample contains values below the cutoff a={model.a}; truncate first"
        )
    v = sample.unique_values
    pts = np.unique(np.concatenate(([model.a], v, v + 1)))
    emp = sample.count_at_least(pts) / sample.size
    dev = np.abs(emp - model.survival(pts))
    i = int(np.argmax(dev))
    return KsResult(d=float(dev[i]), argmax_n=int(pts[i]))


def p_value(d_emp, d_sims):
    """Fraction of simulated KS distances strictly exceeding the empirical one.

    The error is the binomial one, sigma_p = sqrt(p (1-p) / n_sim).
    """
    d_sims = np.asarray(d_sims, dtype=np.float64)
    if d_sims.size == 0:
        raise ValueError("need at least one simulated statistic")
    n_sim = int(d_sims.size)
    n_exceed = int(np.count_nonzero(d_sims > d_emp))
    p = n_exceed / n_sim
    return PValue(
        p=p,
        sigma_p=float(np.sqrt(p * (1.0 - p) / n_sim)),
        n_sim=n_sim,
        n_exceed=n_exceed,
    )
