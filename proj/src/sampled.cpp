// Copyright 2026 the ptkernels authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptkernels/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ptk {

void SampledFunction::validate() const {
    if (grid.size() != values.size())
        throw validation_error("SampledFunction: grid/value length mismatch");
    if (grid.size() < 2)
        throw validation_error("SampledFunction: need at least two samples");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i]))
            throw validation_error("SampledFunction: non-finite entry");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw validation_error("SampledFunction: grid must be strictly increasing");
    }
}

CubicSpline::CubicSpline(const SampledFunction& f) : x_(f.grid), y_(f.values) {
    f.validate();
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    if (n == 2) return;
    // Natural spline: tridiagonal solve for second derivatives.
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
    diag[0] = 1.0;
    diag[n - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        sub[i] = h0;
        diag[i] = 2.0 * (h0 + h1);
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    // Thomas algorithm (upper coefficient for row i is h1 = x[i+1]-x[i]).
    std::vector<double> c(n, 0.0);
    c[0] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = x_[i + 1] - x_[i];
        const double denom = diag[i] - sub[i] * c[i - 1];
        c[i] = h1 / denom;
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / denom;
    }
    for (std::size_t ir = n - 1; ir-- > 1;)
        rhs[ir] -= c[ir] * rhs[ir + 1];
    for (std::size_t i = 1; i + 1 < n; ++i) m_[i] = rhs[i];
}

double CubicSpline::operator()(double x) const {
    if (x < x_.front() || x > x_.back()) return 0.0;
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = (it == x_.begin()) ? 0 : (it - x_.begin() - 1);
    if (i + 1 >= x_.size()) i = x_.size() - 2;
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

SampledFunction read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open series file: " + path);
    SampledFunction f;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double x, v;
        if (!(ls >> x >> v))
            throw validation_error("malformed series line: " + line);
        f.grid.push_back(x);
        f.values.push_back(v);
    }
    f.validate();
    return f;
}

void write_series_csv(std::ostream& os, const std::string& header,
                      const SampledFunction& f) {
    os << "# " << header << "\n";
    char buf[64];
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", f.grid[i], f.values[i]);
        os << buf << "\n";
    }
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw validation_error("linspace: need at least two points");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1.0);
    return g;
}

}  // namespace ptk
