// Copyright 2026 The mcso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compute.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcso/mcso.hpp"

namespace mcso::cli {
namespace {

struct Item {
  SuperpositionParams p;
  double xi = 1.0;
  ThermalChannel ch;
  std::vector<double> axes;
};

struct Block {
  std::vector<std::vector<double>> rows;  // last entry is the closed-form value
  std::vector<double> oracle;
};

bool is_grid(Quantity q) { return q == Quantity::wigner || q == Quantity::evolved_wigner; }

std::vector<std::string> result_columns(Quantity q) {
  switch (q) {
    case Quantity::normalization: return {"normalization"};
    case Quantity::fidelity: return {"fidelity"};
    case Quantity::mandel_q: return {"q"};
    case Quantity::squeezing: return {"s"};
    case Quantity::photocount: return {"n", "p"};
    case Quantity::wigner:
    case Quantity::evolved_wigner: return {"re", "im", "w"};
    case Quantity::negativity: return {"delta"};
  }
  return {};
}

double corner_reach(const GridSpec& g) {
  const double x = std::max(std::abs(g.re_min), std::abs(g.re_max));
  const double y = std::max(std::abs(g.im_min), std::abs(g.im_max));
  return std::hypot(x, y);
}

// smallest 32 * 2^k that is adequate for the state, holds min_levels and lets
// the displaced-parity oracle reach |alpha| = reach
int oracle_cutoff(const SuperpositionParams& p, double reach, int min_levels) {
  int c = cutoff_select(p);
  while (c < min_levels || std::sqrt(static_cast<double>(c)) / 2.0 < reach) {
    c *= 2;
    if (c > kMaxCutoff) throw ResourceError("oracle check needs a cutoff beyond 2048");
  }
  return c;
}

double oracle_scalar(Quantity q, const SuperpositionParams& p) {
  const FockVector v = build_state(p);
  switch (q) {
    case Quantity::normalization: return v.norm_squared();
    case Quantity::fidelity: {
      SuperpositionParams p0 = p;
      p0.m = 0;
      const FockVector v0 = build_state(p0, v.cutoff);
      Complex overlap = 0.0;
      for (int n = 0; n <= v.cutoff; ++n) overlap += std::conj(v0.amps[n]) * v.amps[n];
      return std::norm(overlap) / (v.norm_squared() * v0.norm_squared());
    }
    case Quantity::mandel_q: {
      const double n = oracle_moment(v, 1, 1).real();
      return oracle_moment(v, 2, 2).real() / n - n;
    }
    case Quantity::squeezing:
      return -2.0 * std::abs(oracle_moment(v, 2, 0)) + 2.0 * oracle_moment(v, 1, 1).real();
    default: break;
  }
  throw std::logic_error("oracle_scalar: not a scalar quantity");
}

double closed_scalar(Quantity q, const SuperpositionParams& p) {
  switch (q) {
    case Quantity::normalization: return normalization(p);
    case Quantity::fidelity: return fidelity(p);
    case Quantity::mandel_q: return mandel_q(p);
    case Quantity::squeezing: return squeezing(p);
    default: break;
  }
  throw std::logic_error("closed_scalar: not a scalar quantity");
}

Block evaluate(const SweepConfig& c, const Item& it, unsigned inner_threads) {
  Block b;
  const bool check = c.oracle_check;
  switch (c.quantity) {
    case Quantity::normalization:
    case Quantity::fidelity:
    case Quantity::mandel_q:
    case Quantity::squeezing: {
      const double v = closed_scalar(c.quantity, it.p);
      b.rows.push_back({v});
      if (check) b.oracle.push_back(oracle_scalar(c.quantity, it.p));
      break;
    }
    case Quantity::photocount: {
      const auto dist = photocount_distribution(it.p, it.xi, c.n_max);
      FockVector v;
      if (check) v = build_state(it.p, oracle_cutoff(it.p, 0.0, c.n_max));
      for (int n = 0; n <= c.n_max; ++n) {
        b.rows.push_back({static_cast<double>(n), dist[n]});
        if (check) b.oracle.push_back(oracle_photocount(v, it.xi, n));
      }
      break;
    }
    case Quantity::wigner:
    case Quantity::evolved_wigner: {
      WignerGrid g;
      if (c.quantity == Quantity::wigner) {
        g = wigner_grid(it.p, c.grid, inner_threads);
      } else {
        g = wigner_evolved_grid(it.p, it.ch, c.grid, inner_threads);
      }
      WignerGrid o;
      if (check) {
        const FockVector v = build_state(it.p, oracle_cutoff(it.p, corner_reach(c.grid), 0));
        if (c.quantity == Quantity::wigner) {
          o = sample_grid([&](Complex a) { return oracle_wigner(v, a); }, c.grid, inner_threads);
        } else {
          const FockDensity rho = evolve_master(FockDensity::from_pure(v), it.ch,
                                                master_steps(it.ch, v.cutoff));
          const DensityWignerOracle w(rho);
          o = sample_grid([&](Complex a) { return w(a); }, c.grid, inner_threads);
        }
      }
      for (int ix = 0; ix < c.grid.nx; ++ix) {
        for (int iy = 0; iy < c.grid.ny; ++iy) {
          const Complex a = g.point(ix, iy);
          b.rows.push_back({a.real(), a.imag(), g.at(ix, iy)});
          if (check) b.oracle.push_back(o.at(ix, iy));
        }
      }
      break;
    }
    case Quantity::negativity: {
      QuadratureSettings q = c.quadrature;
      q.threads = inner_threads;
      if (q.half_width <= 0.0) q.half_width = std::abs(it.p.alpha0) + 6.0;
      const NegativeVolume nv = negative_volume(it.p, q);
      b.rows.push_back({nv.value});
      if (check) {
        const double reach = (q.half_width + 2.0 * q.max_growth_steps) * std::sqrt(2.0);
        const FockVector v = build_state(it.p, oracle_cutoff(it.p, reach, 0));
        const NegativeVolume ov =
            negative_volume([&](Complex a) { return oracle_wigner(v, a); }, q);
        b.oracle.push_back(ov.value);
      }
      break;
    }
  }
  return b;
}

}  // namespace

bool oracle_agrees(double closed_form, double oracle) {
  return std::abs(closed_form - oracle) <= 1e-6 * std::abs(oracle) + 1e-10;
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += format_double(r[i]);
    }
    out += '\n';
  }
  return out;
}

ComputeResult run_compute(const SweepConfig& c, unsigned threads) {
  ComputeResult res;
  Table& t = res.table;
  if (c.m.swept) t.columns.push_back("m");
  if (c.theta.swept) t.columns.push_back("theta");
  if (c.phi.swept) t.columns.push_back("phi");
  if (c.alpha0.swept) {
    t.columns.push_back("alpha0_re");
    t.columns.push_back("alpha0_im");
  }
  const bool pc = c.quantity == Quantity::photocount;
  const bool ev = c.quantity == Quantity::evolved_wigner;
  if (pc && c.xi.swept) t.columns.push_back("xi");
  if (ev && c.kappa_t.swept) t.columns.push_back("kappa_t");
  if (ev && c.nbar.swept) t.columns.push_back("nbar");
  for (auto& col : result_columns(c.quantity)) t.columns.push_back(col);

  const std::vector<double> one{0.0};
  const auto& xis = pc ? c.xi.values : one;
  const auto& kts = ev ? c.kappa_t.values : one;
  const auto& nbs = ev ? c.nbar.values : one;
  std::vector<Item> items;
  for (int m : c.m.values) {
    for (double th : c.theta.values) {
      for (double ph : c.phi.values) {
        for (Complex a0 : c.alpha0.values) {
          for (double xi : xis) {
            for (double kt : kts) {
              for (double nb : nbs) {
                Item it;
                it.p = {m, th, ph, a0, c.parity};
                it.xi = xi;
                it.ch = {kt, nb};
                if (c.m.swept) it.axes.push_back(m);
                if (c.theta.swept) it.axes.push_back(th);
                if (c.phi.swept) it.axes.push_back(ph);
                if (c.alpha0.swept) {
                  it.axes.push_back(a0.real());
                  it.axes.push_back(a0.imag());
                }
                if (pc && c.xi.swept) it.axes.push_back(xi);
                if (ev && c.kappa_t.swept) it.axes.push_back(kt);
                if (ev && c.nbar.swept) it.axes.push_back(nb);
                items.push_back(std::move(it));
              }
            }
          }
        }
      }
    }
  }

  std::vector<Block> blocks(items.size());
  // grids and single items parallelize inside; sweeps parallelize across items
  if (is_grid(c.quantity) || items.size() == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) blocks[i] = evaluate(c, items[i], threads);
  } else {
    parallel_for(items.size(), [&](std::size_t i) { blocks[i] = evaluate(c, items[i], 1); },
                 threads);
  }

  res.oracle_checked = c.oracle_check;
  if (c.oracle_check) t.columns.push_back("oracle_abs_diff");
  for (std::size_t i = 0; i < items.size(); ++i) {
    Block& b = blocks[i];
    for (std::size_t r = 0; r < b.rows.size(); ++r) {
      std::vector<double> row = items[i].axes;
      const std::vector<double>& vals = b.rows[r];
      row.insert(row.end(), vals.begin(), vals.end());
      if (c.oracle_check) {
        const double diff = std::abs(vals.back() - b.oracle[r]);
        if (!oracle_agrees(vals.back(), b.oracle[r])) ++res.oracle_failures;
        res.max_oracle_diff = std::max(res.max_oracle_diff, diff);
        row.push_back(diff);
      }
      t.rows.push_back(std::move(row));
    }
  }
  return res;
}

}  // namespace mcso::cli
