#include "scx/simplex.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace scx::lp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tableau simplex over x >= 0 with Bland-style (value, index) tie-breaking,
// phase 1 entered through an auxiliary column when some b is negative.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
          const Eigen::VectorXd& c, double eps)
      : eps_(eps),
        m_(static_cast<int>(A.rows())),
        n_(static_cast<int>(A.cols())),
        nonbasic_(n_ + 1),
        basic_(m_),
        D_(m_ + 2, n_ + 2) {
    D_.setZero();
    D_.topLeftCorner(m_, n_) = A;
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      D_(i, n_) = -1.0;
      D_(i, n_ + 1) = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      D_(m_, j) = -c[j];
    }
    nonbasic_[n_] = -1;
    D_(m_ + 1, n_) = 1.0;
  }

  double solve(Eigen::VectorXd& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (D_(i, n_ + 1) < D_(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && D_(r, n_ + 1) < -eps_) {
      pivot(r, n_);
      if (!run(2) || D_(m_ + 1, n_ + 1) < -eps_) return -kInf;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (prefer(D_(i, j), nonbasic_[j], D_(i, s), nonbasic_[s])) s = j;
        }
        pivot(i, s);
      }
    }
    const bool ok = run(1);
    x = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = D_(i, n_ + 1);
    }
    return ok ? D_(m_, n_ + 1) : kInf;
  }

 private:
  static bool prefer(double va, int ia, double vb, int ib) {
    return std::pair(va, ia) < std::pair(vb, ib);
  }

  void pivot(int r, int s) {
    const double inv = 1.0 / D_(r, s);
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(D_(i, s)) <= eps_) continue;
      const double factor = D_(i, s) * inv;
      D_.row(i) -= factor * D_.row(r);
      D_(i, s) = factor * D_(r, s);  // undo the subtraction in column s
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) D_(r, j) *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) D_(i, s) *= -inv;
    }
    D_(r, s) = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool run(int phase) {
    const int obj_row = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == -1 ||
            prefer(D_(obj_row, j), nonbasic_[j], D_(obj_row, s), nonbasic_[s])) {
          s = j;
        }
      }
      if (D_(obj_row, s) >= -eps_) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (D_(i, s) <= eps_) continue;
        if (r == -1 ||
            prefer(D_(i, n_ + 1) / D_(i, s), basic_[i],
                   D_(r, n_ + 1) / D_(r, s), basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return false;  // unbounded along s
      pivot(r, s);
    }
  }

  double eps_;
  int m_, n_;
  std::vector<int> nonbasic_, basic_;
  Eigen::MatrixXd D_;
};

}  // namespace

Solution maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c, double eps) {
  const int n = static_cast<int>(A.cols());
  // x free: substitute x = u - v with u, v >= 0.
  Eigen::MatrixXd A2(A.rows(), 2 * n);
  A2 << A, -A;
  Eigen::VectorXd c2(2 * n);
  c2 << c, -c;

  Tableau tab(A2, b, c2, eps);
  Eigen::VectorXd y;
  const double value = tab.solve(y);

  Solution out;
  if (value == -kInf) {
    out.status = SolveStatus::Infeasible;
  } else if (value == kInf) {
    out.status = SolveStatus::Unbounded;
  } else {
    out.status = SolveStatus::Optimal;
    out.x = y.head(n) - y.tail(n);
    out.objective = value;
  }
  return out;
}

}  // namespace scx::lp
