"""k-power domination propagation time: engines, exact solvers, and theorem checks."""

__version__ = "0.1.0"
