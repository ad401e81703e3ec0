#pragma once

// Dense two-phase simplex with Bland's rule. Header-only so it can be instantiated for
// floating-point and exact rational scalars.

#include <cmath>
#include <cstddef>
#include <vector>

namespace umw::lp {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr double kEps = 1e-11;
  static bool positive(double x) { return x > kEps; }
  static bool negative(double x) { return x < -kEps; }
  static bool zero(double x) { return std::abs(x) <= kEps; }
};

enum class Relation { LessEq, GreaterEq, Equal };
enum class Status { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct Constraint {
  std::vector<Scalar> coeffs;  // one per structural variable
  Relation relation = Relation::LessEq;
  Scalar rhs{};
};

/// maximize objective . x  subject to constraints, x >= 0.
template <class Scalar>
struct LinearProgram {
  std::vector<Scalar> objective;
  std::vector<Constraint<Scalar>> constraints;

  std::size_t num_vars() const { return objective.size(); }
  void add(std::vector<Scalar> coeffs, Relation rel, Scalar rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

template <class Scalar>
struct Solution {
  Status status = Status::Infeasible;
  Scalar value{};
  std::vector<Scalar> x;
};

template <class Scalar>
class SimplexSolver {
  using T = ScalarTraits<Scalar>;

 public:
  explicit SimplexSolver(const LinearProgram<Scalar>& lp) : n_(lp.num_vars()) {
    // Column layout: [structural | slack/surplus | artificial]
    std::size_t n_slack = 0, n_art = 0;
    for (const auto& c : lp.constraints) {
      Relation rel = flipped(c) ? flip(c.relation) : c.relation;
      if (rel != Relation::Equal) ++n_slack;
      if (rel != Relation::LessEq) ++n_art;
    }
    first_art_ = n_ + n_slack;
    cols_ = first_art_ + n_art;
    const std::size_t m = lp.constraints.size();
    a_.assign(m, std::vector<Scalar>(cols_, Scalar(0)));
    b_.assign(m, Scalar(0));
    basis_.assign(m, 0);

    std::size_t slack = n_, art = first_art_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const bool neg = flipped(c);
      Relation rel = neg ? flip(c.relation) : c.relation;
      for (std::size_t j = 0; j < n_; ++j) a_[i][j] = neg ? Scalar(-c.coeffs[j]) : c.coeffs[j];
      b_[i] = neg ? Scalar(-c.rhs) : c.rhs;
      if (rel == Relation::LessEq) {
        a_[i][slack] = Scalar(1);
        basis_[i] = slack++;
      } else {
        if (rel == Relation::GreaterEq) a_[i][slack++] = Scalar(-1);
        a_[i][art] = Scalar(1);
        basis_[i] = art++;
      }
    }
    objective_ = lp.objective;
  }

  Solution<Scalar> solve() {
    Solution<Scalar> sol;
    if (cols_ > first_art_) {
      std::vector<Scalar> phase1(cols_, Scalar(0));
      for (std::size_t j = first_art_; j < cols_; ++j) phase1[j] = Scalar(-1);
      run(phase1, cols_);
      Scalar infeasibility(0);
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] >= first_art_) infeasibility += b_[i];
      if (T::positive(infeasibility)) return sol;
      drive_out_artificials();
    }
    std::vector<Scalar> phase2(cols_, Scalar(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = objective_[j];
    if (!run(phase2, first_art_)) {
      sol.status = Status::Unbounded;
      return sol;
    }
    sol.status = Status::Optimal;
    sol.x.assign(n_, Scalar(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = b_[i];
    sol.value = Scalar(0);
    for (std::size_t j = 0; j < n_; ++j) sol.value += objective_[j] * sol.x[j];
    return sol;
  }

 private:
  static bool flipped(const Constraint<Scalar>& c) { return T::negative(c.rhs); }
  static Relation flip(Relation r) {
    return r == Relation::LessEq ? Relation::GreaterEq : r == Relation::GreaterEq ? Relation::LessEq : r;
  }

  // Maximizes cost over columns [0, usable). Returns false if unbounded.
  bool run(const std::vector<Scalar>& cost, std::size_t usable) {
    const std::size_t m = basis_.size();
    for (;;) {
      // Bland: lowest-index column with positive reduced cost enters.
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable && enter == usable; ++j) {
        Scalar d = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (!T::zero(a_[i][j])) d -= cost[basis_[i]] * a_[i][j];
        }
        if (T::positive(d)) enter = j;
      }
      if (enter == usable) return true;

      // Minimum ratio; ties to the lowest basic variable index.
      std::size_t leave = m;
      Scalar best_ratio(0);
      for (std::size_t i = 0; i < m; ++i) {
        if (!T::positive(a_[i][enter])) continue;
        Scalar ratio = b_[i] / a_[i][enter];
        if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Scalar p = a_[row][col];
    for (auto& v : a_[row]) v /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == row || T::zero(a_[i][col])) continue;
      const Scalar f = a_[i][col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!T::zero(a_[row][j])) a_[i][j] -= f * a_[row][j];
      }
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  // After phase 1, basic artificials sit at zero; pivot them out or drop redundant rows.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      std::size_t col = first_art_;
      for (std::size_t j = 0; j < first_art_ && col == first_art_; ++j)
        if (!T::zero(a_[i][j])) col = j;
      if (col < first_art_) {
        pivot(i, col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Scalar>> a_;
  std::vector<Scalar> b_;
  std::vector<std::size_t> basis_;
  std::vector<Scalar> objective_;
};

template <class Scalar>
Solution<Scalar> solve(const LinearProgram<Scalar>& lp) {
  return SimplexSolver<Scalar>(lp).solve();
}

}  // namespace umw::lp
