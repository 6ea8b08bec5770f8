// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spinhol/errors.hpp"
#include "spinhol/stellar.hpp"

namespace spinhol {

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

/// Sorts `rows` in place and returns the sign of the sorting permutation, 0 on a repeat.
int sort_with_sign(std::vector<int>& rows) {
  int sign = 1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = i; j > 0 && rows[j - 1] > rows[j]; --j) {
      std::swap(rows[j - 1], rows[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] == rows[i - 1]) return 0;
  }
  return sign;
}

Matrix induced(const Matrix& op, const std::vector<std::vector<int>>& subsets,
               const std::map<std::vector<int>, Eigen::Index>& index) {
  const auto dim = static_cast<Eigen::Index>(subsets.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto& basis = subsets[static_cast<std::size_t>(col)];
    for (std::size_t p = 0; p < basis.size(); ++p) {
      for (Eigen::Index r = 0; r < op.rows(); ++r) {
        const Complex v = op(r, basis[p]);
        if (v == Complex(0.0)) continue;
        std::vector<int> image = basis;
        image[p] = static_cast<int>(r);
        const int sign = sort_with_sign(image);
        if (sign == 0) continue;
        out(index.at(image), col) += static_cast<double>(sign) * v;
      }
    }
  }
  return out;
}

int twice_weight(SpinQuantum s, const std::vector<int>& subset) {
  int w = 0;
  for (int r : subset) w += s.twice_m_at(r);
  return w;
}

}  // namespace

PluckerVector plucker_coordinates(const KPlane& p) {
  PluckerVector v{p.spin(), p.k(), k_subsets(p.dimension(), p.k()), Vector()};
  v.components.resize(static_cast<Eigen::Index>(v.subsets.size()));
  const auto k = static_cast<Eigen::Index>(p.k());
  for (std::size_t i = 0; i < v.subsets.size(); ++i) {
    Matrix minor(k, k);
    for (Eigen::Index r = 0; r < k; ++r) minor.row(r) = p.frame().row(v.subsets[i][static_cast<std::size_t>(r)]);
    v.components(static_cast<Eigen::Index>(i)) = minor.determinant();
  }
  v.components.normalize();
  return v;
}

InducedSpinOperators induced_spin_operators(SpinQuantum s, int k) {
  if (k < 1 || k > s.dimension()) throw DomainError("k must satisfy 1 <= k <= 2s+1");
  InducedSpinOperators ops;
  ops.s = s;
  ops.k = k;
  ops.subsets = k_subsets(s.dimension(), k);
  std::map<std::vector<int>, Eigen::Index> index;
  for (std::size_t i = 0; i < ops.subsets.size(); ++i) index.emplace(ops.subsets[i], static_cast<Eigen::Index>(i));
  const SpinOperators base = spin_operators(s);
  ops.sx = induced(base.sx, ops.subsets, index);
  ops.sy = induced(base.sy, ops.subsets, index);
  ops.sz = induced(base.sz, ops.subsets, index);
  return ops;
}

std::map<int, int> casimir_multiplet_content(SpinQuantum s, int k) {
  const InducedSpinOperators ops = induced_spin_operators(s, k);
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(ops.casimir(), Eigen::EigenvaluesOnly);
  std::map<int, int> states;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lambda = eig.eigenvalues()(i);
    // λ = j(j+1)  ⇒  2j = √(1 + 4λ) − 1.
    const int twice_j = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * lambda) - 1.0));
    ++states[twice_j];
  }
  std::map<int, int> content;
  for (const auto& [twice_j, n] : states) {
    if (n % (twice_j + 1) != 0) {
      throw DegeneracyError("Casimir eigenvalue count " + std::to_string(n) + " is not a multiple of 2j+1 = " +
                            std::to_string(twice_j + 1));
    }
    content[twice_j] = n / (twice_j + 1);
  }
  return content;
}

std::vector<Multiplet> multiplet_decomposition(const PluckerVector& v) {
  const InducedSpinOperators ops = induced_spin_operators(v.s, v.k);
  const Matrix raising = ops.raising();
  const Matrix lowering = ops.lowering();
  const auto dim = static_cast<Eigen::Index>(ops.subsets.size());

  std::vector<int> weights(ops.subsets.size());
  int top_weight = 0;
  for (std::size_t i = 0; i < ops.subsets.size(); ++i) {
    weights[i] = twice_weight(v.s, ops.subsets[i]);
    top_weight = std::max(top_weight, weights[i]);
  }
  auto weight_space = [&](int w) {
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] == w) idx.push_back(static_cast<Eigen::Index>(i));
    }
    return idx;
  };

  std::vector<Multiplet> out;
  for (int twice_j = top_weight; twice_j >= 0; twice_j -= 2) {
    const std::vector<Eigen::Index> here = weight_space(twice_j);
    if (here.empty()) continue;
    const std::vector<Eigen::Index> above = weight_space(twice_j + 2);
    const auto n_here = static_cast<Eigen::Index>(here.size());

    // Highest-weight space: kernel of S_+ restricted to this weight space.
    Matrix kernel;
    if (above.empty()) {
      kernel = Matrix::Identity(n_here, n_here);
    } else {
      Matrix block(static_cast<Eigen::Index>(above.size()), n_here);
      for (std::size_t a = 0; a < above.size(); ++a) {
        for (Eigen::Index h = 0; h < n_here; ++h) block(static_cast<Eigen::Index>(a), h) = raising(above[a], here[static_cast<std::size_t>(h)]);
      }
      const Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) rank += (sv(i) > 1e-9) ? 1 : 0;
      kernel = svd.matrixV().rightCols(n_here - rank);
    }
    const Eigen::Index copies = kernel.cols();
    const Eigen::Index expected = n_here - static_cast<Eigen::Index>(above.size());
    if (copies != expected) {
      throw DegeneracyError("highest-weight space for 2j = " + std::to_string(twice_j) + " has dimension " +
                            std::to_string(copies) + ", expected " + std::to_string(expected));
    }

    // Deterministic basis: project wedge basis vectors in order, Gram–Schmidt against the
    // vectors already accepted.
    std::vector<Vector> highest;
    for (Eigen::Index c = 0; c < n_here && static_cast<Eigen::Index>(highest.size()) < copies; ++c) {
      Vector candidate = kernel * kernel.row(c).adjoint();
      for (const Vector& h : highest) candidate -= h.dot(candidate) * h;
      const double norm = candidate.norm();
      if (norm > 1e-6) highest.push_back(candidate / norm);
    }
    if (static_cast<Eigen::Index>(highest.size()) != copies) {
      throw DegeneracyError("could not select highest-weight vectors for 2j = " + std::to_string(twice_j));
    }

    const SpinQuantum j = SpinQuantum::from_twice(twice_j);
    for (std::size_t copy = 0; copy < highest.size(); ++copy) {
      Vector state = Vector::Zero(dim);
      for (Eigen::Index h = 0; h < n_here; ++h) state(here[static_cast<std::size_t>(h)]) = highest[copy](h);
      Vector component(twice_j + 1);
      for (int row = 0; row <= twice_j; ++row) {
        component(row) = state.dot(v.components);
        if (row == twice_j) break;
        const double m = j.m_at(row);
        state = lowering * state / std::sqrt(j.casimir() - m * (m - 1.0));
      }
      out.push_back(Multiplet{j, static_cast<int>(copy), std::move(component)});
    }
  }
  return out;
}

const WeightedConstellation& MultiConstellation::principal() const {
  for (const auto& m : multiplets) {
    if (m.constellation) return m;
  }
  throw DomainError("multiconstellation has no non-zero multiplet");
}

MultiConstellation multiconstellation(const KPlane& p) {
  const std::vector<Multiplet> parts = multiplet_decomposition(plucker_coordinates(p));
  MultiConstellation mc;
  Vector weights(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Multiplet& part = parts[i];
    WeightedConstellation wc{part.j, part.copy, Complex(0.0), part.component, std::nullopt};
    const double norm = part.component.norm();
    if (norm > 1e-9) {
      Eigen::Index first = 0;
      while (std::abs(part.component(first)) <= 1e-8 * norm) ++first;
      const Complex phase = std::polar(1.0, std::arg(part.component(first)));
      wc.weight = norm * phase;
      wc.component = part.component / (norm * phase);
      wc.constellation = majorana_constellation(wc.component);
    }
    weights(static_cast<Eigen::Index>(i)) = wc.weight;
    mc.multiplets.push_back(std::move(wc));
  }
  mc.spectator = majorana_constellation(weights);
  return mc;
}

}  // namespace spinhol
