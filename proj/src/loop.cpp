#include "almosthopf/loop.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "almosthopf/errors.hpp"

namespace almosthopf {

namespace {

std::string fmt(Complex z) {
  std::ostringstream out;
  out << z.real() << (z.imag() < 0 ? " - " : " + ")
      << std::abs(z.imag()) << "i";
  return out.str();
}

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

CMatrix identity_like(const CMatrix& m) {
  return CMatrix::Identity(m.rows(), m.cols());
}

// Orthonormal basis of the image, read off the eigenvalue cluster at 1.
CMatrix image_basis(const CMatrix& p) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < p.rows(); ++k)
    if (es.eigenvalues()(k) > 0.5) ++rank;
  return es.eigenvectors().rightCols(rank);
}

void require_same_dim(const MeromorphicLoop& a, const MeromorphicLoop& b,
                      const char* what) {
  if (a.n != b.n)
    throw std::invalid_argument(std::string(what) +
                                " needs loops of equal matrix size");
}

}  // namespace

bool operator==(const Projection& a, const Projection& b) {
  return a.mat.rows() == b.mat.rows() && a.mat.cols() == b.mat.cols() &&
         a.mat == b.mat;
}

bool operator==(const BasicFactor& a, const BasicFactor& b) {
  return a.alpha == b.alpha && a.p == b.p && a.pperp == b.pperp;
}

bool operator==(const MeromorphicLoop& a, const MeromorphicLoop& b) {
  return a.n == b.n && a.factors == b.factors;
}

Projection make_projection(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("projection matrix must be square");
  if (m.rows() < 1 || m.rows() > kMaxMatrixDim)
    throw std::invalid_argument("projection size must be between 1 and " +
                                std::to_string(kMaxMatrixDim));
  if (!m.allFinite())
    throw std::invalid_argument("projection entries must be finite");
  double herm = (m - m.adjoint()).norm();
  if (herm > kProjectionTol)
    throw std::invalid_argument("projection must be Hermitian (deviation " +
                                fmt(herm) + ")");
  double idem = (m * m - m).norm();
  if (idem > kProjectionTol)
    throw std::invalid_argument("projection must be idempotent (deviation " +
                                fmt(idem) + ")");
  return Projection{m};
}

Projection span_projector(const CMatrix& columns) {
  if (columns.rows() < 1 || columns.rows() > kMaxMatrixDim)
    throw std::invalid_argument("span size must be between 1 and " +
                                std::to_string(kMaxMatrixDim));
  const Eigen::Index n = columns.rows();
  if (columns.cols() == 0 || columns.norm() == 0.0)
    return Projection{CMatrix::Zero(n, n)};
  Eigen::ColPivHouseholderQR<CMatrix> qr(columns);
  qr.setThreshold(1e-12);
  const Eigen::Index rank = qr.rank();
  if (rank == 0) return Projection{CMatrix::Zero(n, n)};
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, rank);
  CMatrix p = q * q.adjoint();
  p = 0.5 * (p + p.adjoint().eval());
  return make_projection(p);
}

BasicFactor make_factor(Complex alpha, const CMatrix& p) {
  return make_factor(alpha, make_projection(p));
}

BasicFactor make_factor(Complex alpha, Projection p) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("pole must be finite");
  if (alpha.imag() == 0.0)
    throw std::invalid_argument("pole must lie off the real axis");
  Projection pperp{identity_like(p.mat) - p.mat};
  return BasicFactor{alpha, std::move(p), std::move(pperp)};
}

MeromorphicLoop make_loop(int n, std::vector<BasicFactor> factors) {
  if (n < 1 || n > kMaxMatrixDim)
    throw std::invalid_argument("matrix size must be between 1 and " +
                                std::to_string(kMaxMatrixDim));
  for (const auto& f : factors)
    if (f.p.mat.rows() != n)
      throw std::invalid_argument("factor size disagrees with the loop size");
  return MeromorphicLoop{n, std::move(factors)};
}

MeromorphicLoop identity_loop(int n) { return make_loop(n); }

Complex theta(Complex alpha, Complex lambda) {
  return (lambda - std::conj(alpha)) / (lambda - alpha);
}

CMatrix eval(const BasicFactor& f, Complex lambda) {
  if (std::abs(lambda - f.alpha) <= kPoleGuard)
    throw PreconditionError("evaluation at " + fmt(lambda) +
                            " is within " + fmt(kPoleGuard) + " of the pole " +
                            fmt(f.alpha));
  return f.pperp.mat + theta(f.alpha, lambda) * f.p.mat;
}

CMatrix eval(const MeromorphicLoop& loop, Complex lambda) {
  CMatrix out = CMatrix::Identity(loop.n, loop.n);
  for (const auto& f : loop.factors) out = out * eval(f, lambda);
  return out;
}

MeromorphicLoop i_op(const MeromorphicLoop& loop) {
  MeromorphicLoop out;
  out.n = loop.n;
  out.factors.reserve(loop.factors.size());
  for (auto it = loop.factors.rbegin(); it != loop.factors.rend(); ++it)
    out.factors.push_back({it->alpha, it->pperp, it->p});
  return out;
}

MeromorphicLoop inverse(const MeromorphicLoop& loop) {
  MeromorphicLoop out;
  out.n = loop.n;
  out.factors.reserve(loop.factors.size());
  for (auto it = loop.factors.rbegin(); it != loop.factors.rend(); ++it)
    out.factors.push_back({std::conj(it->alpha), it->p, it->pperp});
  return out;
}

MeromorphicLoop mul(const MeromorphicLoop& a, const MeromorphicLoop& b) {
  require_same_dim(a, b, "product");
  MeromorphicLoop out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

bool scalar_factor(const BasicFactor& f) {
  return f.p.mat.norm() <= kProjectionTol ||
         (f.p.mat - identity_like(f.p.mat)).norm() <= kProjectionTol;
}

bool vacuum_loop(const MeromorphicLoop& loop) {
  return std::all_of(loop.factors.begin(), loop.factors.end(), scalar_factor);
}

bool upper_loop(const MeromorphicLoop& loop) {
  return std::all_of(loop.factors.begin(), loop.factors.end(),
                     [](const BasicFactor& f) { return f.alpha.imag() > 0; });
}

bool lower_loop(const MeromorphicLoop& loop) {
  return std::all_of(loop.factors.begin(), loop.factors.end(),
                     [](const BasicFactor& f) { return f.alpha.imag() < 0; });
}

std::pair<BasicFactor, BasicFactor> reverse_pair(const BasicFactor& f1,
                                                 const BasicFactor& f2) {
  if (f1.p.mat.rows() != f2.p.mat.rows())
    throw std::invalid_argument(
        "pole reversal needs factors of equal matrix size");
  const Complex a = f1.alpha;
  const Complex b = f2.alpha;
  if (a.imag() * b.imag() >= 0)
    throw PreconditionError("poles " + fmt(a) + " and " + fmt(b) +
                            " must lie in different half planes");
  const CMatrix& p1 = f1.p.mat;
  const CMatrix& p2 = f2.p.mat;
  const CMatrix one = identity_like(p1);

  if (std::abs(b - std::conj(a)) <=
      kDegenerateGuard * std::max(1.0, std::abs(a))) {
    const CMatrix& p3 = f1.pperp.mat;
    const CMatrix& p4 = f2.pperp.mat;
    // Both sides are Laurent polynomials in z = theta_a(lambda); the three
    // coefficients must agree exactly.
    double r = std::max({((one - p1) * p2 - p3 * (one - p4)).norm(),
                         ((one - p1) * (one - p2) + p1 * p2 -
                          ((one - p3) * (one - p4) + p3 * p4))
                             .norm(),
                         (p1 * (one - p2) - (one - p3) * p4).norm()});
    double scale = std::max(1.0, p1.norm() * p2.norm());
    if (r > kLaurentTol * scale)
      throw PreconditionError(
          "degenerate pole reversal failed its coefficient check (residual " +
          fmt(r) + ")");
    return {make_factor(b, f1.pperp), make_factor(a, f2.pperp)};
  }

  const Complex theta_a_b = theta(a, b);
  const Complex theta_b_a_inv = 1.0 / theta(b, a);
  CMatrix v2 = image_basis(p2);
  Projection p3 = span_projector((f1.pperp.mat + theta_a_b * p1) * v2);
  CMatrix v1 = image_basis(p1);
  Projection p4 = span_projector(
      ((one - p3.mat) + theta_b_a_inv * p3.mat) * v1);
  BasicFactor g1 = make_factor(b, std::move(p3));
  BasicFactor g2 = make_factor(a, std::move(p4));

  double resid = 0.0;
  for (int k = 0; k < 10; ++k) {
    Complex lam(-9.0 + 2.0 * k, 0.0);
    resid = std::max(resid, (eval(f1, lam) * eval(f2, lam) -
                             eval(g1, lam) * eval(g2, lam))
                                .norm());
  }
  if (resid > kReversalTol)
    throw PreconditionError(
        "pole reversal failed its product self-check (residual " + fmt(resid) +
        ")");
  return {g1, g2};
}

Reordering act(const MeromorphicLoop& s, const MeromorphicLoop& u) {
  require_same_dim(s, u, "action");
  if (!lower_loop(s))
    throw PreconditionError(
        "left operand must have all poles in the lower half plane");
  if (!upper_loop(u))
    throw PreconditionError(
        "right operand must have all poles in the upper half plane");
  for (const auto& sf : s.factors)
    for (const auto& uf : u.factors)
      if (std::abs(uf.alpha - std::conj(sf.alpha)) <=
          kDegenerateGuard * std::max(1.0, std::abs(sf.alpha)))
        throw PreconditionError("conjugate pole positions " + fmt(sf.alpha) +
                                " and " + fmt(uf.alpha) +
                                " across the factor lists");

  std::vector<BasicFactor> lower = s.factors;
  std::vector<BasicFactor> upper;
  upper.reserve(u.factors.size());
  for (const auto& uf : u.factors) {
    BasicFactor cur = uf;
    for (std::size_t k = lower.size(); k-- > 0;) {
      auto [g1, g2] = reverse_pair(lower[k], cur);
      cur = g1;
      lower[k] = g2;
    }
    upper.push_back(cur);
  }
  return {MeromorphicLoop{u.n, std::move(upper)},
          MeromorphicLoop{s.n, std::move(lower)}};
}

MeromorphicLoop act_right(const MeromorphicLoop& s, const MeromorphicLoop& u) {
  return act(s, u).right;
}

MeromorphicLoop act_left(const MeromorphicLoop& s, const MeromorphicLoop& u) {
  return act(s, u).left;
}

std::vector<double> sample_lambdas(std::uint64_t seed, int count,
                                   const std::vector<double>& avoid) {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  int attempts = 0;
  while (out.size() < static_cast<std::size_t>(count)) {
    if (++attempts > 1000 * (count + 100))
      throw std::invalid_argument(
          "the excluded neighbourhoods leave no room to sample");
    double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double lam = -10.0 + 20.0 * u01;
    bool clear = true;
    for (double a : avoid)
      if (std::abs(lam - a) <= kLambdaGap) {
        clear = false;
        break;
      }
    if (clear) out.push_back(lam);
  }
  return out;
}

std::vector<double> pole_real_parts(
    const std::vector<const MeromorphicLoop*>& loops) {
  std::vector<double> out;
  for (const MeromorphicLoop* loop : loops)
    for (const auto& f : loop->factors) out.push_back(f.alpha.real());
  return out;
}

double loop_distance(const MeromorphicLoop& a, const MeromorphicLoop& b,
                     const std::vector<double>& lambdas) {
  require_same_dim(a, b, "distance");
  double out = 0.0;
  for (double lam : lambdas)
    out = std::max(out,
                   (eval(a, Complex(lam, 0)) - eval(b, Complex(lam, 0))).norm());
  return out;
}

double unitarity_residual(const MeromorphicLoop& loop,
                          const std::vector<double>& lambdas) {
  double out = 0.0;
  for (double lam : lambdas) {
    CMatrix v = eval(loop, Complex(lam, 0));
    out = std::max(out, (v.adjoint() * v - identity_like(v)).norm());
  }
  return out;
}

const NumericCheck* NumericReport::find(std::string_view rule) const {
  for (const auto& c : checks)
    if (c.rule == rule) return &c;
  return nullptr;
}

bool NumericReport::rule_passed(std::string_view rule) const {
  const NumericCheck* c = find(rule);
  return c != nullptr && c->passed;
}

std::string NumericReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.rule;
    if (c.tol > 0)
      out += " (max residual " + fmt(c.max_residual) + ", tol " + fmt(c.tol) +
             ")";
    if (!c.note.empty()) out += ": " + c.note;
    out += "\n";
  }
  out += passed ? "all checks passed\n" : "FAILED\n";
  return out;
}

nlohmann::json NumericReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"rule", c.rule},
                           {"passed", c.passed},
                           {"maxResidual", c.max_residual},
                           {"tol", c.tol},
                           {"note", c.note}});
  return {{"passed", passed},
          {"seed", seed},
          {"sampleCount", sample_count},
          {"checks", checks_json}};
}

namespace {

struct RuleAccumulator {
  NumericCheck check;

  explicit RuleAccumulator(std::string rule, double tol) {
    check.rule = std::move(rule);
    check.tol = tol;
  }

  void observe(double residual) {
    check.max_residual = std::max(check.max_residual, residual);
  }

  void finish(NumericReport& into) {
    check.passed = check.max_residual <= check.tol;
    if (!check.passed) into.passed = false;
    into.checks.push_back(std::move(check));
  }
};

// The preconditions rule is structural: it fails when a sample cannot be
// acted on at all, and its note carries the first reason seen.
struct PreconditionRule {
  NumericCheck check;

  PreconditionRule() { check.rule = "preconditions"; }

  void violation(std::size_t sample, const std::string& reason) {
    check.passed = false;
    if (check.note.empty())
      check.note = "sample " + std::to_string(sample) + ": " + reason;
  }

  void finish(NumericReport& into) {
    if (!check.passed) into.passed = false;
    into.checks.push_back(std::move(check));
  }
};

void require_sampling_args(int n_lambda, double tol) {
  if (n_lambda < 1)
    throw std::invalid_argument("sample count must be positive");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

NumericReport verify_matched_numeric(
    const std::vector<MatchedLoopSample>& samples, int n_lambda, double tol,
    std::uint64_t seed) {
  require_sampling_args(n_lambda, tol);
  NumericReport rep;
  rep.seed = seed;
  rep.sample_count = n_lambda;

  std::vector<double> avoid;
  for (const auto& smp : samples)
    for (const double re :
         pole_real_parts({&smp.s, &smp.t, &smp.u, &smp.v}))
      avoid.push_back(re);
  const std::vector<double> lambdas = sample_lambdas(seed, n_lambda, avoid);

  RuleAccumulator right_m("right-over-m-product", tol);
  RuleAccumulator left_m("left-over-m-product", tol);
  RuleAccumulator right_g("right-over-g-product", tol);
  RuleAccumulator left_g("left-over-g-product", tol);
  RuleAccumulator inv_r("involution-right", tol);
  RuleAccumulator inv_l("involution-left", tol);
  PreconditionRule pre;

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [s, t, u, v] = samples[k];
    try {
      Reordering tu = act(t, u);
      Reordering su = act(s, u);
      Reordering stu = act(mul(s, t), u);
      Reordering s_tu = act(s, tu.right);
      Reordering suv = act(s, mul(u, v));
      Reordering slv = act(su.left, v);
      Reordering rev = act(i_op(su.left), i_op(su.right));

      right_m.observe(loop_distance(s_tu.right, stu.right, lambdas));
      left_m.observe(loop_distance(mul(s_tu.left, tu.left), stu.left, lambdas));
      right_g.observe(
          loop_distance(suv.right, mul(su.right, slv.right), lambdas));
      left_g.observe(loop_distance(slv.left, suv.left, lambdas));
      inv_r.observe(loop_distance(rev.right, i_op(u), lambdas));
      inv_l.observe(loop_distance(rev.left, i_op(s), lambdas));
    } catch (const PreconditionError& e) {
      pre.violation(k, e.what());
    }
  }

  right_m.finish(rep);
  left_m.finish(rep);
  right_g.finish(rep);
  left_g.finish(rep);
  inv_r.finish(rep);
  inv_l.finish(rep);
  pre.finish(rep);
  return rep;
}

NumericReport verify_mutually_inverse_numeric(
    const std::vector<InverseLoopSample>& samples, int n_lambda, double tol,
    std::uint64_t seed) {
  require_sampling_args(n_lambda, tol);
  NumericReport rep;
  rep.seed = seed;
  rep.sample_count = n_lambda;

  std::vector<double> avoid;
  for (const auto& smp : samples)
    for (const double re : pole_real_parts({&smp.s, &smp.u}))
      avoid.push_back(re);
  const std::vector<double> lambdas = sample_lambdas(seed, n_lambda, avoid);

  RuleAccumulator act_r("inverse-action-right", tol);
  RuleAccumulator act_l("inverse-action-left", tol);
  RuleAccumulator i_comm("inverse-i-commute", tol);
  RuleAccumulator unit("unitarity", kUnitarityTol);
  PreconditionRule pre;

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [s, u] = samples[k];
    try {
      const Reordering su = act(s, u);
      const Reordering rev = act(inverse(u), inverse(s));

      act_r.observe(loop_distance(rev.right, inverse(su.left), lambdas));
      act_l.observe(loop_distance(rev.left, inverse(su.right), lambdas));
      for (const MeromorphicLoop* x : {&s, &u})
        i_comm.observe(
            loop_distance(inverse(i_op(*x)), i_op(inverse(*x)), lambdas));
      for (const MeromorphicLoop* x :
           {&s, &u, &su.right, &su.left})
        unit.observe(unitarity_residual(*x, lambdas));
      unit.observe(unitarity_residual(inverse(s), lambdas));
      unit.observe(unitarity_residual(inverse(u), lambdas));
    } catch (const PreconditionError& e) {
      pre.violation(k, e.what());
    }
  }

  act_r.finish(rep);
  act_l.finish(rep);
  i_comm.finish(rep);
  unit.finish(rep);
  pre.finish(rep);
  return rep;
}

namespace {

double json_number(const nlohmann::json& doc, const char* what) {
  if (!doc.is_number())
    throw ParseError(std::string(what) + " must be a number");
  return doc.get<double>();
}

}  // namespace

nlohmann::json loop_to_json(const MeromorphicLoop& loop) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : loop.factors) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < f.p.mat.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < f.p.mat.cols(); ++j)
        row.push_back({f.p.mat(i, j).real(), f.p.mat(i, j).imag()});
      rows.push_back(row);
    }
    factors.push_back({{"alphaRe", f.alpha.real()},
                       {"alphaIm", f.alpha.imag()},
                       {"P", rows}});
  }
  return {{"n", loop.n}, {"factors", factors}};
}

MeromorphicLoop loop_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("loop document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxMatrixDim)
    throw ParseError("\"n\" must be between 1 and " +
                     std::to_string(kMaxMatrixDim));
  if (!doc.contains("factors") || !doc["factors"].is_array())
    throw ParseError("\"factors\" must be an array");

  std::vector<BasicFactor> factors;
  std::size_t k = 0;
  for (const auto& fj : doc["factors"]) {
    const std::string where = "factor " + std::to_string(k++);
    if (!fj.is_object()) throw ParseError(where + ": must be an object");
    for (const char* key : {"alphaRe", "alphaIm", "P"})
      if (!fj.contains(key))
        throw ParseError(where + ": missing \"" + key + "\"");
    Complex alpha(json_number(fj["alphaRe"], "\"alphaRe\""),
                  json_number(fj["alphaIm"], "\"alphaIm\""));
    const auto& rows = fj["P"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
      throw ParseError(where + ": \"P\" must be an array of " +
                       std::to_string(n) + " rows");
    CMatrix p(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw ParseError(where + ": row " + std::to_string(i) + " must hold " +
                         std::to_string(n) + " entries");
      for (int j = 0; j < n; ++j) {
        const auto& cell = row[static_cast<std::size_t>(j)];
        if (!cell.is_array() || cell.size() != 2)
          throw ParseError(where + ": entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") must be a [re, im] pair");
        p(i, j) = Complex(json_number(cell[0], "a matrix entry"),
                          json_number(cell[1], "a matrix entry"));
      }
    }
    try {
      factors.push_back(make_factor(alpha, p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return make_loop(n, std::move(factors));
}

MeromorphicLoop parse_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return loop_from_json(doc);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace almosthopf
