"""Intersection bodies of symmetric bodies of revolution.

Thin wrapper over the C++ core. The main entry points:

  parse_body(spec)           -> Profile, from the CLI body grammar
  ik_radial / ik_axis        -> pointwise intersection-body radial values
  intersection_body          -> sampled IK profile (dict with theta/rho)
  iterate_intersection       -> repeated application with renormalization
  modulus_equator, power_type_fit, equator_convexity, bm_ball
  run_scenario / scenario_ids
"""

from ._core import *          # noqa: F401,F403
from ._core import __version__  # noqa: F401
