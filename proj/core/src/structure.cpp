#include "htype/structure.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "htype/errors.hpp"

namespace htype {

namespace {

using Matrix = Eigen::MatrixXd;
using Generators = std::vector<Matrix>;

// Left multiplication by the imaginary units of a Cayley-Dickson algebra of
// dimension d (4: quaternions, 8: octonions) with the cyclic triples below.
Generators left_multiplications(int d, std::span<const std::array<int, 3>> triples) {
  // table[a][b] = (sign, index) of e_a * e_b
  std::vector<std::vector<std::pair<int, int>>> table(d, std::vector<std::pair<int, int>>(d));
  for (int a = 0; a < d; ++a) {
    table[0][a] = {1, a};
    table[a][0] = {1, a};
  }
  for (int a = 1; a < d; ++a) table[a][a] = {-1, 0};
  for (const auto& t : triples) {
    for (int k = 0; k < 3; ++k) {
      const int i = t[k], j = t[(k + 1) % 3], l = t[(k + 2) % 3];
      table[i][j] = {1, l};
      table[j][i] = {-1, l};
    }
  }
  Generators gens;
  for (int a = 1; a < d; ++a) {
    Matrix L = Matrix::Zero(d, d);
    for (int b = 0; b < d; ++b) {
      const auto [sign, idx] = table[a][b];
      L(idx, b) = sign;
    }
    gens.push_back(L);
  }
  return gens;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Minimal-dimension generators of Cl_{0,n}: J_i^2 = -1, skew, pairwise anticommuting.
Generators minimal_generators(int n) {
  static const std::array<std::array<int, 3>, 1> quaternion{{{1, 2, 3}}};
  static const std::array<std::array<int, 3>, 7> octonion{
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  if (n == 0) return {};
  if (n == 1) {
    Matrix e(2, 2);
    e << 0, 1, -1, 0;
    return {e};
  }
  if (n <= 3) {
    auto q = left_multiplications(4, quaternion);
    q.resize(static_cast<std::size_t>(n));
    return q;
  }
  if (n <= 7) {
    auto o = left_multiplications(8, octonion);
    o.resize(static_cast<std::size_t>(n));
    return o;
  }
  if (n == 8) {
    // Doubling: J_i (x) sigma_z for the seven octonion units, plus I (x) epsilon.
    Matrix sz(2, 2), eps(2, 2);
    sz << 1, 0, 0, -1;
    eps << 0, 1, -1, 0;
    Generators out;
    for (const auto& g : left_multiplications(8, octonion)) out.push_back(kron(g, sz));
    out.push_back(kron(Matrix::Identity(8, 8), eps));
    return out;
  }
  // Periodicity: B_1..B_8 (x) I together with Omega (x) A_j, Omega = B_1...B_8.
  const Generators b = minimal_generators(8);
  const Generators a = minimal_generators(n - 8);
  const Eigen::Index d = a.empty() ? 1 : a.front().rows();
  Matrix omega = Matrix::Identity(16, 16);
  for (const auto& g : b) omega = omega * g;
  Generators out;
  for (const auto& g : b) out.push_back(kron(g, Matrix::Identity(d, d)));
  for (const auto& g : a) out.push_back(kron(omega, g));
  return out;
}

std::string admissibility_message(int m, int n) {
  std::ostringstream os;
  os << "(m, n) = (" << m << ", " << n << ") is not admissible: rho(" << m
     << ") = " << radon_hurwitz(m) << " requires n <= " << radon_hurwitz(m) - 1;
  return os.str();
}

}  // namespace

HTypeStructure::HTypeStructure(int m, std::vector<Eigen::MatrixXd> mats) : m_(m), mats_(std::move(mats)) {
  if (m_ < 1) throw ShapeError("HTypeStructure: m must be positive");
  for (const auto& u : mats_)
    if (u.rows() != m_ || u.cols() != m_) throw ShapeError("HTypeStructure: structure matrix is not m x m");
}

bool HTypeStructure::integral() const {
  for (const auto& u : mats_)
    for (Eigen::Index i = 0; i < u.size(); ++i)
      if (u.data()[i] != std::round(u.data()[i])) return false;
  return true;
}

int radon_hurwitz(int m) {
  if (m < 1) throw DomainError("radon_hurwitz: m must be >= 1");
  int e = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++e;
  }
  const int a = e / 4;
  const int b = e % 4;
  return 8 * a + (1 << b);
}

int minimal_dimension(int n) {
  if (n < 0) throw DomainError("minimal_dimension: n must be >= 0");
  static constexpr int base[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  int m = base[n % 8];
  for (int k = 0; k < n / 8; ++k) m *= 16;
  return m;
}

HTypeStructure construct_structure(int m, int n) {
  if (m < 1) throw DomainError("construct_structure: m must be positive");
  if (n == 0) throw DegenerateStructureError("construct_structure: n = 0 (abelian group) is not supported");
  if (n < 0) throw DomainError("construct_structure: n must be positive");
  if (n > radon_hurwitz(m) - 1) throw AdmissibilityError(admissibility_message(m, n));

  const Generators gens = minimal_generators(n);
  const int base = static_cast<int>(gens.front().rows());
  // Radon-Hurwitz admissibility is equivalent to divisibility by the minimal module size.
  if (m % base != 0) throw AdmissibilityError(admissibility_message(m, n));
  const int copies = m / base;
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(gens.size());
  for (const auto& g : gens) mats.push_back(kron(Eigen::MatrixXd::Identity(copies, copies), g));
  return HTypeStructure(m, std::move(mats));
}

std::vector<CheckReport> verify_structure(const HTypeStructure& s, double tol) {
  const int m = s.m();
  const int n = s.n();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
  double skew = 0.0, orth = 0.0, anti = 0.0;
  for (const auto& u : s.mats()) {
    skew = std::max(skew, (u + u.transpose()).cwiseAbs().maxCoeff());
    orth = std::max(orth, (u.transpose() * u - id).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      anti = std::max(anti, (s.mat(i) * s.mat(j) + s.mat(j) * s.mat(i)).cwiseAbs().maxCoeff());
  const nlohmann::json params{{"m", m}, {"n", n}};
  return {make_report("skew_symmetry", skew, 0.0, tol, -1.0, params),
          make_report("orthogonality", orth, 0.0, tol, -1.0, params),
          make_report("anticommutation", anti, 0.0, tol, -1.0, params)};
}

std::vector<CheckReport> verify_structure_exact(const HTypeStructure& s) {
  if (!s.integral()) throw DomainError("verify_structure_exact: structure has non-integer entries");
  using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  const int m = s.m();
  const int n = s.n();
  std::vector<IMatrix> u;
  for (const auto& mat : s.mats()) u.push_back(mat.cast<std::int64_t>());
  const IMatrix id = IMatrix::Identity(m, m);
  std::int64_t skew = 0, orth = 0, anti = 0;
  for (const auto& a : u) {
    skew = std::max(skew, (a + a.transpose()).cwiseAbs().maxCoeff());
    orth = std::max(orth, (a.transpose() * a - id).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) anti = std::max(anti, (u[i] * u[j] + u[j] * u[i]).cwiseAbs().maxCoeff());
  const nlohmann::json params{{"m", m}, {"n", n}, {"arithmetic", "integer"}};
  return {make_report("skew_symmetry_exact", static_cast<double>(skew), 0.0, 0.0, -1.0, params),
          make_report("orthogonality_exact", static_cast<double>(orth), 0.0, 0.0, -1.0, params),
          make_report("anticommutation_exact", static_cast<double>(anti), 0.0, 0.0, -1.0, params)};
}

Eigen::VectorXd j_map(const HTypeStructure& s, std::span<const double> z, std::span<const double> v) {
  if (static_cast<int>(z.size()) != s.n() || static_cast<int>(v.size()) != s.m())
    throw ShapeError("j_map: z must have n entries and v must have m entries");
  const Eigen::Map<const Eigen::VectorXd> vv(v.data(), s.m());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(s.m());
  for (int r = 0; r < s.n(); ++r)
    if (z[r] != 0.0) out.noalias() += z[r] * (s.mat(r).transpose() * vv);
  return out;
}

nlohmann::json structure_to_json(const HTypeStructure& s) {
  const bool ints = s.integral();
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& u : s.mats()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        if (ints)
          row.push_back(static_cast<int>(u(i, j)));
        else
          row.push_back(u(i, j));
      }
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"m", s.m()}, {"n", s.n()}, {"mats", std::move(mats)}};
}

HTypeStructure structure_from_json(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  const auto& mats = j.at("mats");
  if (static_cast<int>(mats.size()) != n) throw ShapeError("structure_from_json: mats has wrong length");
  std::vector<Eigen::MatrixXd> out;
  for (const auto& rows : mats) {
    if (static_cast<int>(rows.size()) != m) throw ShapeError("structure_from_json: matrix has wrong row count");
    Eigen::MatrixXd u(m, m);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(rows[i].size()) != m) throw ShapeError("structure_from_json: row has wrong length");
      for (int k = 0; k < m; ++k) u(i, k) = rows[i][k].get<double>();
    }
    out.push_back(std::move(u));
  }
  return HTypeStructure(m, std::move(out));
}

}  // namespace htype
