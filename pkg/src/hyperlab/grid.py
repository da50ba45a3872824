"""Algebra-valued finite-difference grids.

A field stores one coefficient vector per node, so an array of shape
(*grid, dim); the heat stepper is the explicit Euler scheme on a uniform
periodic line and is real-linear, which makes evolving the algebra-valued
field literally the same float operations as evolving each of the dim real
component fields.  Residual evaluation plugs central differences into the
differential polynomials of a system, with monomials multiplied in the
written order inside the coefficient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cayley_dickson import CDElement
from .jets import AlgebraMismatch, PDESystem


class UnstableStep(ValueError):
    """Explicit step exceeds the h^2/2 stability bound."""


class ResolutionTooSmall(ValueError):
    pass


@dataclass
class GridField:
    """Uniform periodic grid of algebra values.

    ``values`` has shape (*grid_shape, dim); dtype float64 for approximate
    runs or object (Fractions) for exact ones.  ``level`` records the
    doubling level when the components are Cayley-Dickson coefficients.
    """

    values: np.ndarray
    spacing: object
    level: int | None = None

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.ndim < 2:
            raise ValueError("values must have shape (*grid, dim)")
        if self.level is not None and self.values.shape[-1] != 1 << self.level:
            raise AlgebraMismatch("component count does not match the level")

    @property
    def dim(self) -> int:
        return self.values.shape[-1]

    @property
    def nodes(self) -> int:
        return self.values.shape[0]

    def component(self, k: int) -> "GridField":
        return GridField(self.values[..., k:k + 1], self.spacing, level=None)

    def element(self, *node) -> CDElement:
        if self.level is None:
            raise AlgebraMismatch("field has no doubling level")
        return CDElement(self.level, list(self.values[node]))

    @classmethod
    def from_elements(cls, elements, spacing) -> "GridField":
        level = elements[0].level
        exact = all(e.is_exact for e in elements)
        dtype = object if exact else float
        values = np.array([list(e.coeffs) for e in elements], dtype=dtype)
        return cls(values, spacing, level=level)

    def to_json_dict(self) -> dict:
        return {
            "spacing": str(self.spacing),
            "level": self.level,
            "shape": list(self.values.shape[:-1]),
            "components": [
                [str(c) for c in node]
                for node in self.values.reshape(-1, self.dim)
            ],
        }


def heat_evolve(field: GridField, dt, steps: int) -> GridField:
    """Explicit Euler for u_t = u_xx on the periodic line:
    u <- u + (dt/h^2) (u_{j+1} - 2 u_j + u_{j-1}), applied componentwise.

    Rejects dt > h^2/2.  Because every operation is an elementwise array
    operation, the evolution of the full field and of any single component
    slice perform identical floating-point work, so they agree bitwise.
    """
    h = field.spacing
    if dt > h * h / 2:
        raise UnstableStep(f"dt={dt} exceeds h^2/2={h * h / 2}")
    scale = dt / (h * h)
    vals = field.values
    for _ in range(steps):
        lap = np.roll(vals, -1, axis=0) - 2 * vals + np.roll(vals, 1, axis=0)
        vals = vals + scale * lap
    return GridField(vals, field.spacing, level=field.level)


def single_mode_decay_factor(nodes: int, dt: float) -> float:
    """Amplification of one discrete Fourier mode sin(2 pi x) per step."""
    h = 1.0 / nodes
    return 1.0 - 4.0 * dt * np.sin(np.pi * h) ** 2 / h ** 2


# ---------------------------------------------------------------------------
# residuals on 2-d grids
# ---------------------------------------------------------------------------

def _as_object_grid(values):
    arr = np.empty((len(values), len(values[0])), dtype=object)
    for i, row in enumerate(values):
        for j, v in enumerate(row):
            arr[i, j] = v
    return arr


def residual(system: PDESystem, fields: dict, spacings, origins=None):
    """Central-difference residual of each equation at every interior node.

    ``fields`` maps each dependent name to a 2-d array (nested lists are
    fine) of scalars or algebra elements indexed along the system's two
    independents; ``spacings`` gives the step per independent.  Returns one
    interior-shaped nested list per equation.  Monomials evaluate
    left-to-right in the coordinate order, so noncommutative coefficients
    multiply exactly as written.
    """
    coords = system.coords
    if len(coords.independents) != 2:
        raise ValueError("grid residuals support two independents")
    if coords.order > 2:
        raise ValueError("residuals support order <= 2")
    grids = {name: _as_object_grid(fields[name]) for name in coords.dependents}
    shapes = {g.shape for g in grids.values()}
    if len(shapes) != 1:
        raise AlgebraMismatch("dependent grids have different shapes")
    (n1, n2), = shapes
    margin = 1
    if n1 < 2 * margin + 1 or n2 < 2 * margin + 1:
        raise ResolutionTooSmall("need at least 3 nodes per axis")
    h1, h2 = spacings
    x_name, y_name = coords.independents
    if origins is None:
        origins = (0, 0)

    sample = next(iter(grids.values()))[0, 0]
    algebra_valued = isinstance(sample, CDElement)
    one = CDElement.one(sample.level) if algebra_valued else Fraction(1)

    def env_at(i, j):
        # base coordinates enter as multiples of the unit so that mixed
        # monomials stay inside the algebra
        env = {x_name: (origins[0] + i * h1) * one,
               y_name: (origins[1] + j * h2) * one}
        for dep, g in grids.items():
            u = g[i, j]
            env[dep] = u
            if coords.order >= 1:
                env[f"{dep}_{x_name}"] = (g[i + 1, j] - g[i - 1, j]) / (2 * h1)
                env[f"{dep}_{y_name}"] = (g[i, j + 1] - g[i, j - 1]) / (2 * h2)
            if coords.order >= 2:
                names = {
                    coords.derivative_name(dep, x_name, x_name):
                        (g[i + 1, j] - 2 * u + g[i - 1, j]) / (h1 * h1),
                    coords.derivative_name(dep, y_name, y_name):
                        (g[i, j + 1] - 2 * u + g[i, j - 1]) / (h2 * h2),
                    coords.derivative_name(dep, x_name, y_name):
                        (g[i + 1, j + 1] - g[i + 1, j - 1]
                         - g[i - 1, j + 1] + g[i - 1, j - 1]) / (4 * h1 * h2),
                }
                if not coords.symmetric:
                    names[f"{dep}_{y_name}{x_name}"] = names[
                        coords.derivative_name(dep, x_name, y_name)
                    ]
                env.update(names)
        return env

    order = coords.variables
    out = []
    for eq in system.equations:
        rows = []
        for i in range(margin, n1 - margin):
            row = []
            for j in range(margin, n2 - margin):
                row.append(eq.evaluate(env_at(i, j), one=one, var_order=order))
            rows.append(row)
        out.append(rows)
    return out


def max_abs(values) -> float:
    """Largest euclidean magnitude over a nested residual array."""
    worst = 0.0
    for row in values:
        for v in row:
            if isinstance(v, CDElement):
                mag = float(sum(float(c) * float(c) for c in v.coeffs)) ** 0.5
            else:
                mag = abs(float(v))
            worst = max(worst, mag)
    return worst


# ---------------------------------------------------------------------------
# separable-solution check for the product equation
# ---------------------------------------------------------------------------

@dataclass
class SeparableReport:
    max_residual: float
    witness: tuple | None
    commutative_subalgebra: bool
    nodes_checked: int

    def to_json_dict(self) -> dict:
        out = {
            "max_residual": self.max_residual,
            "commutative_subalgebra": self.commutative_subalgebra,
            "nodes_checked": self.nodes_checked,
        }
        if self.witness is not None:
            i, j, value = self.witness
            out["witness"] = {"i": i, "j": j, "value": value.to_json_dict()}
        return out


def _values_commute_associate(values, tolerance: float) -> bool:
    def same(x, y):
        if x.is_exact and y.is_exact:
            return x == y
        return x.isclose(y, tolerance)

    for a in values:
        for b in values:
            if not same(a * b, b * a):
                return False
    for a in values:
        for b in values:
            ab = a * b
            for c in values:
                if not same(ab * c, a * (b * c)):
                    return False
    return True


def separable_dalembert_check(
    f_values, g_values, f_derivs, g_derivs, tolerance: float = 1e-9
) -> SeparableReport:
    """Evaluate R = u u_xy - u_x u_y for the product ansatz u = f(x) g(y).

    ``f_values``/``f_derivs`` sample an algebra-valued f and its derivative
    on a 1-d grid (analytic derivatives or central differences, caller's
    choice), likewise for g.  R vanishes identically whenever all sampled
    values and derivatives lie in one commutative associative subalgebra;
    the report carries the commutativity diagnosis and, when R does not
    vanish, the first offending node.
    """
    levels = {v.level for v in (*f_values, *g_values, *f_derivs, *g_derivs)}
    if len(levels) != 1:
        raise AlgebraMismatch("samples mix algebra levels")
    worst = 0.0
    witness = None
    count = 0
    for i, (f, fp) in enumerate(zip(f_values, f_derivs)):
        for j, (g, gp) in enumerate(zip(g_values, g_derivs)):
            u = f * g
            u_x = fp * g
            u_y = f * gp
            u_xy = fp * gp
            r = u * u_xy - u_x * u_y
            count += 1
            mag = float(sum(float(c) * float(c) for c in r.coeffs)) ** 0.5
            if mag > worst:
                worst = mag
                if mag > tolerance:
                    witness = (i, j, r)
    commutative = _values_commute_associate(
        list(f_values) + list(g_values) + list(f_derivs) + list(g_derivs),
        tolerance,
    )
    return SeparableReport(
        max_residual=worst,
        witness=witness,
        commutative_subalgebra=commutative,
        nodes_checked=count,
    )
