"""
Error hierarchy shared by the library and the CLI
"""
from typing import List, Optional


class CurveFluxError(Exception):
    """Base class; exit_code is what the CLI returns for it"""
    exit_code = 2
    u: Optional[float] = None

    def at(self, u: float) -> "CurveFluxError":
        """Attach the offending u (once) and return self for re-raising"""
        if self.u is None:
            self.u = u
            self.args = (f"{self} (u={u!r})",)
        return self


class ConfigError(CurveFluxError):
    """Syntax or schema problems in an experiment config"""
    exit_code = 1

    def __init__(self, violations: List[str], line: Optional[int] = None):
        self.violations = list(violations)
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + "; ".join(self.violations))


class DomainError(CurveFluxError):
    """Argument outside the domain of a curve, channel or profile"""


class SingularParametrizationError(CurveFluxError):
    """Curve parametrization with vanishing speed"""


class FocalPointError(CurveFluxError):
    """A focal point of the base curve lies on or inside the channel"""

    def __init__(self, message: str, u: Optional[float] = None):
        self.u = u
        if u is not None:
            message = f"{message} (u={u!r})"
        super().__init__(message)


class NoFocalPointError(CurveFluxError):
    """Zero curvature, the focal point is at infinity"""


class DegenerateInputError(CurveFluxError):
    """Not enough samples or repeated points"""


class ShapeError(CurveFluxError):
    """Field and grid/channel do not match"""


class PoleError(CurveFluxError):
    """Potential evaluated at one of its poles"""


class DegeneratePairError(CurveFluxError):
    """Identical or tangent circles"""


class EstimatorDegenerateError(CurveFluxError):
    """Estimator geometry the formulas do not cover"""


class NoIntersectionError(CurveFluxError):
    """Parallel tangent lines on a curved base"""


class SolverError(CurveFluxError):
    """Linear solve did not reach the requested residual"""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual={residual:.3e})")


class FlatFieldError(CurveFluxError):
    """Every measurement sample was indeterminate"""
