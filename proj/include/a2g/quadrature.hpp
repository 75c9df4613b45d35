// a2gchan - UAV air-to-ground channel models and Manhattan-grid LoS simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef A2G_QUADRATURE_HPP
#define A2G_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace a2g::quadrature {

struct NodeWeight
{
    double node;
    double weight;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre polynomial.
const std::vector<NodeWeight>& gauss_legendre(int order);

/// Integrates f over [a, b] with the given Gauss-Legendre order.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

/// Adaptive Simpson to an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

} // namespace a2g::quadrature

#endif
