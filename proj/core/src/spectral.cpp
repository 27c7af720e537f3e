#include "htype/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "htype/errors.hpp"
#include "htype/parallel.hpp"

namespace htype {

namespace {

template <class T>
T legendre_value(int k, const T& z) {
  if (k == 0) return T(1.0);
  T p0(1.0), p1 = z;
  for (int j = 1; j < k; ++j) {
    T p2 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

constexpr double kMaxCondition = 1e12;

}  // namespace

GalerkinBasis default_basis(int m, int n, int K, double lambda) {
  if (K < 1) throw DomainError("default_basis: K must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("default_basis: lambda must be positive");
  GalerkinBasis basis;
  basis.m = m;
  basis.n = n;
  basis.lambda = lambda;
  std::ostringstream recipe;
  recipe << "U_lambda * P_a(alpha) * P_b(2 beta - 1), lambda = " << lambda;
  basis.recipe = recipe.str();
  const double q = m + 2.0 * n;
  const double amp = std::pow(lambda, (q - 2.0) / 2.0);
  for (int d = 0; static_cast<int>(basis.degrees.size()) < K; ++d) {
    for (int a = d; a >= 0 && static_cast<int>(basis.degrees.size()) < K; --a) {
      const int b = d - a;
      basis.degrees.emplace_back(a, b);
      basis.functions.emplace_back([=](const Jet& s0, const Jet& tau0) {
        const Jet s = lambda * s0;
        const Jet tau = (lambda * lambda) * tau0;
        const Jet s2 = s * s;
        const Jet c = 1.0 + 0.25 * s2;
        const Jet d2 = c * c + tau * tau;
        const Jet alpha = (1.0 - s2 * s2 / 16.0 - tau * tau) / d2;
        const Jet beta = 2.0 * tau / d2;
        const Jet u = amp * pow(d2, -(q - 2.0) / 4.0);
        return u * legendre_value(a, alpha) * legendre_value(b, 2.0 * beta - 1.0);
      });
    }
  }
  return basis;
}

GalerkinBasis default_basis(const HTypeStructure& s, int K, double lambda) {
  return default_basis(s.m(), s.n(), K, lambda);
}

double mass_weight(double lambda, double s, double tau) {
  const double ls = lambda * s;
  const double lt = lambda * lambda * tau;
  const double c = 1.0 + 0.25 * ls * ls;
  return lambda * lambda / (c * c + lt * lt);
}

Assembly assemble(const BiradialRule& rule, const GalerkinBasis& basis) {
  const std::size_t K = basis.size();
  const std::size_t N = rule.size();
  const std::size_t nt = rule.tau.size();
  std::vector<std::vector<BiradialJet>> jets(K);
  for (std::size_t k = 0; k < K; ++k) jets[k] = sample_jets(rule, basis.functions[k]);
  std::vector<double> weight(N);
  for (std::size_t idx = 0; idx < N; ++idx) weight[idx] = mass_weight(basis.lambda, rule.s[idx / nt], rule.tau[idx % nt]);

  Assembly out;
  out.A.resize(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));
  out.B.resize(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(K));
  // Entries are independent; each one is reduced serially in node order.
  parallel::for_ranges(K * K, [&](std::size_t begin, std::size_t end) {
    std::vector<double> a(N), b(N);
    for (std::size_t e = begin; e < end; ++e) {
      const std::size_t k = e / K, l = e % K;
      for (std::size_t idx = 0; idx < N; ++idx) {
        const double s = rule.s[idx / nt];
        const auto& p = jets[k][idx];
        const auto& q = jets[l][idx];
        a[idx] = p.ds * q.ds + 0.25 * s * s * p.dtau * q.dtau;
        b[idx] = weight[idx] * p.value * q.value;
      }
      out.A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = integrate_values(rule, a);
      out.B(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = integrate_values(rule, b);
    }
  });
  if (!out.A.allFinite() || !out.B.allFinite()) throw AssemblyError("assemble: non-finite matrix entry");
  const double scale = std::max(out.A.cwiseAbs().maxCoeff(), out.B.cwiseAbs().maxCoeff());
  out.asymmetry = std::max((out.A - out.A.transpose()).cwiseAbs().maxCoeff(),
                           (out.B - out.B.transpose()).cwiseAbs().maxCoeff());
  if (out.asymmetry > 1e-13 * std::max(scale, 1.0)) {
    std::ostringstream os;
    os << "assemble: asymmetry " << out.asymmetry << " exceeds 1e-13";
    throw AssemblyError(os.str());
  }
  return out;
}

Eigen::MatrixXd cholesky(const Eigen::MatrixXd& B) {
  const Eigen::Index n = B.rows();
  if (B.cols() != n) throw ShapeError("cholesky: matrix must be square");
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = B(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > 0.0)) {
      std::ostringstream os;
      os << "cholesky: non-positive pivot " << d << " at row " << j;
      throw FactorizationError(os.str());
    }
    L(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double v = B(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
      L(i, j) = v / L(j, j);
    }
  }
  return L;
}

GevpResult jacobi_eigen(const Eigen::MatrixXd& C) {
  const Eigen::Index n = C.rows();
  if (C.cols() != n) throw ShapeError("jacobi_eigen: matrix must be square");
  Eigen::MatrixXd a = 0.5 * (C + C.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double total = std::max(a.norm(), std::numeric_limits<double>::min());
  int sweep = 0;
  for (; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-16 * total) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  GevpResult r;
  r.values.resize(n);
  r.vectors.resize(n, n);
  r.sweeps = sweep;
  for (Eigen::Index k = 0; k < n; ++k) {
    r.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    r.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return r;
}

GevpResult solve_gevp(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw ShapeError("solve_gevp: A and B must be square of equal size");
  const Eigen::MatrixXd L = cholesky(B);
  const auto tri = L.triangularView<Eigen::Lower>();
  // C = L^{-1} A L^{-T}
  const Eigen::MatrixXd X = tri.solve(A);
  const Eigen::MatrixXd C = tri.solve(X.transpose()).transpose();
  GevpResult r = jacobi_eigen(C);
  r.vectors = L.transpose().triangularView<Eigen::Upper>().solve(r.vectors);
  return r;
}

double condition_number(const Eigen::MatrixXd& B) {
  const GevpResult e = jacobi_eigen(B);
  const double lo = e.values(0);
  const double hi = e.values(e.values.size() - 1);
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

double projection_residual(const BiradialRule& rule, const GalerkinBasis& basis, const BiradialField& f) {
  const std::size_t K = basis.size();
  const std::size_t nt = rule.tau.size();
  const Assembly asm_ = assemble(rule, basis);
  const auto fv = sample(rule, f);
  std::vector<double> tmp(fv.size());
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(K));
  for (std::size_t k = 0; k < K; ++k) {
    const auto pv = sample(rule, basis.functions[k]);
    for (std::size_t i = 0; i < fv.size(); ++i)
      tmp[i] = mass_weight(basis.lambda, rule.s[i / nt], rule.tau[i % nt]) * fv[i] * pv[i];
    rhs(static_cast<Eigen::Index>(k)) = integrate_values(rule, tmp);
  }
  for (std::size_t i = 0; i < fv.size(); ++i)
    tmp[i] = mass_weight(basis.lambda, rule.s[i / nt], rule.tau[i % nt]) * fv[i] * fv[i];
  const double ff = integrate_values(rule, tmp);
  const Eigen::MatrixXd L = cholesky(asm_.B);
  const Eigen::VectorXd y = L.triangularView<Eigen::Lower>().solve(rhs);
  const double residual = std::max(ff - y.squaredNorm(), 0.0);
  return std::sqrt(residual / ff);
}

SpectrumResult spectrum(const BiradialRule& rule, const GalerkinBasis& basis) {
  const Assembly asm_ = assemble(rule, basis);
  SpectrumResult r;
  r.m = rule.m;
  r.n = rule.n;
  r.K = static_cast<int>(basis.size());
  r.nodes = rule.nodes;
  r.scale = rule.scale;
  r.lambda = basis.lambda;
  r.asymmetry = asm_.asymmetry;
  r.condition = condition_number(asm_.B);
  if (!(r.condition < kMaxCondition)) {
    std::ostringstream os;
    os << "spectrum: mass matrix condition number " << r.condition << " at K = " << r.K;
    throw ConditioningError(os.str(), r.condition);
  }
  const GevpResult g = solve_gevp(asm_.A, asm_.B);
  r.eigenvalues.assign(g.values.data(), g.values.data() + g.values.size());
  r.vectors = g.vectors;

  const Eigen::VectorXd v1 = g.vectors.col(0);
  const double b11 = asm_.B(0, 0);
  const double overlap = (asm_.B.row(0) * v1)(0);
  const double norm = v1.dot(asm_.B * v1);
  r.off_u_mass = std::max(0.0, 1.0 - overlap * overlap / (b11 * norm));
  if (r.K >= 2) {
    const Eigen::VectorXd v2 = g.vectors.col(1);
    r.b_orthogonality = std::abs(v1.dot(asm_.B * v2));
    r.a_orthogonality = std::abs(v1.dot(asm_.A * v2)) / std::abs(g.values(1));
  }
  const double q = rule.m + 2.0 * rule.n;
  const double mu2 = rule.m * (q + 2.0) / 4.0;
  for (double e : r.eigenvalues)
    if (std::abs(e - mu2) <= 0.01 * mu2) ++r.mu2_multiplicity;
  return r;
}

SpectrumResult spectrum(const HTypeStructure& s, int K, int nodes, double scale, double lambda) {
  return spectrum(make_rule(s.m(), s.n(), nodes, scale), default_basis(s, K, lambda));
}

nlohmann::json to_json(const SpectrumResult& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["K"] = r.K;
  j["nodes"] = r.nodes;
  j["scale"] = r.scale;
  j["lambda"] = r.lambda;
  j["eigenvalues"] = r.eigenvalues;
  j["condition"] = r.condition;
  j["asymmetry"] = r.asymmetry;
  j["off_u_mass"] = r.off_u_mass;
  j["b_orthogonality"] = r.b_orthogonality;
  j["a_orthogonality"] = r.a_orthogonality;
  j["mu2_multiplicity"] = r.mu2_multiplicity;
  return j;
}

}  // namespace htype
