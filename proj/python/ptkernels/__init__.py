# Copyright 2026 the ptkernels authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Poisson and heat kernels of inverse-square and Poschl-Teller operators."""

from ._core import (  # noqa: F401
    ConvergenceError,
    ValidationError,
    bessel_i,
    bessel_j,
    boundary_pullback,
    bromwich_invert,
    check_hankel_properties,
    conjugation_residual,
    fd_solve_dirichlet,
    gamma_fn,
    gauss_2f1,
    hankel_transform,
    heat_kernel,
    heat_spectral_integral,
    hyp_map,
    legendre_q,
    pochhammer,
    poisson_kernel_euclidean,
    poisson_kernel_hyp,
    poisson_kernel_trig,
    solve_dirichlet,
    trig_map,
    weighted_laplace_integral,
)

__version__ = "0.1.0"
