// Meromorphic matrix loops in factored form. A basic factor with pole
// alpha off the real axis and Hermitian projection P is the function
//
//   Phi_{alpha,P}(lambda) = Pperp + theta_alpha(lambda) P,
//   theta_alpha(lambda)   = (lambda - conj(alpha)) / (lambda - alpha),
//
// which is unitary on the real axis and the identity at infinity. A loop
// is an ordered product of such factors and is never refactored; every
// operation here works on the factor list. Loops with all poles in the
// upper half plane and loops with all poles in the lower half plane form
// the two families whose reordering defines the actions:
//
//   s * u = (s |> u)(s <| u)   for s lower, u upper,
//
// computed by bubbling each factor of u leftward through the factors of s
// with reverse_pair. The right part keeps u's pole positions in order and
// the left part keeps s's.

#ifndef ALMOSTHOPF_LOOP_HPP
#define ALMOSTHOPF_LOOP_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace almosthopf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Pinned tolerances. Projection admission and the degenerate-branch switch
// are scaled by the data; the rest are absolute Frobenius-norm bounds.
inline constexpr double kProjectionTol = 1e-10;  // Hermitian / idempotent slack
inline constexpr double kUnitarityTol = 1e-9;    // |Phi' Phi - 1| on the real axis
inline constexpr double kPoleGuard = 1e-12;      // eval refuses lambda this close to a pole
inline constexpr double kDegenerateGuard = 1e-9; // |beta - conj(alpha)| switch, scaled
inline constexpr double kReversalTol = 1e-9;     // reverse_pair product self-check
inline constexpr double kLaurentTol = 1e-12;     // degenerate coefficient residual, scaled
inline constexpr double kLambdaGap = 1e-6;       // sampling gap around pole real parts
inline constexpr int kMaxMatrixDim = 8;

// Hermitian idempotent matrix. Built through make_projection or
// span_projector, which enforce the invariants.
struct Projection {
  CMatrix mat;
};

// One factor Phi_{alpha,P}; the pole alpha lies off the real axis. The
// complement Pperp = 1 - P is computed once at construction and carried
// along so that the i operation can swap the pair instead of re-deriving
// it; that swap is what makes i_op an exact involution on factor lists.
struct BasicFactor {
  Complex alpha;
  Projection p;
  Projection pperp;
};

// Ordered product of basic factors acting on C^n. An empty list is the
// constant identity loop.
struct MeromorphicLoop {
  int n = 0;
  std::vector<BasicFactor> factors;
};

// Exact entrywise equality, used for the list-level involution laws.
bool operator==(const Projection& a, const Projection& b);
bool operator==(const BasicFactor& a, const BasicFactor& b);
bool operator==(const MeromorphicLoop& a, const MeromorphicLoop& b);

// Validates a square matrix of size 1..8 with finite entries that is
// Hermitian and idempotent within kProjectionTol in Frobenius norm.
// Throws std::invalid_argument otherwise.
Projection make_projection(const CMatrix& m);

// Orthogonal projector onto the column span of the given matrix: the
// columns are orthonormalized and the projector is Q Q'. A rank-zero span
// yields the zero projector.
Projection span_projector(const CMatrix& columns);

// Throws std::invalid_argument if alpha is real or p is not admissible.
BasicFactor make_factor(Complex alpha, const CMatrix& p);
BasicFactor make_factor(Complex alpha, Projection p);

// Validates 1 <= n <= kMaxMatrixDim and that every factor acts on C^n.
MeromorphicLoop make_loop(int n, std::vector<BasicFactor> factors = {});
MeromorphicLoop identity_loop(int n);

Complex theta(Complex alpha, Complex lambda);

// Factor and loop evaluation; the loop value is the ordered product of its
// factor values, first factor leftmost. Throws PreconditionError when
// lambda is within kPoleGuard of a pole.
CMatrix eval(const BasicFactor& f, Complex lambda);
CMatrix eval(const MeromorphicLoop& loop, Complex lambda);

// Anti-involution: reverses the factor list and swaps each factor's stored
// (P, Pperp) pair, so applying it twice restores the loop bit for bit.
// Pole positions do not move, so each family is preserved.
MeromorphicLoop i_op(const MeromorphicLoop& loop);

// Pointwise inverse: reverses the factor list and moves each pole to its
// conjugate, swapping the two families.
MeromorphicLoop inverse(const MeromorphicLoop& loop);

// Pointwise product = list concatenation. Dimensions must agree.
MeromorphicLoop mul(const MeromorphicLoop& a, const MeromorphicLoop& b);

// Scalar factors are those with P = 0 or P = 1 within kProjectionTol;
// vacuum loops (the J families) are products of scalar factors.
bool scalar_factor(const BasicFactor& f);
bool vacuum_loop(const MeromorphicLoop& loop);

// Family membership: all poles strictly above / below the real axis.
// Empty loops belong to both families.
bool upper_loop(const MeromorphicLoop& loop);
bool lower_loop(const MeromorphicLoop& loop);

// Pole reversal for factors in different half planes: returns (g1, g2)
// with g1 at f2's pole and g2 at f1's pole such that f1 f2 = g1 g2.
//
// Generic branch (f2's pole away from the conjugate of f1's): the image of
// g1's projection is (P1perp + theta_a(b) P1) Image(P2) and the image of
// g2's is (P3perp + theta_b(a)^{-1} P3) Image(P1); each result is verified
// against the product on ten real sample points within kReversalTol.
//
// Degenerate branch (|b - conj(a)| <= kDegenerateGuard * max(1, |a|)):
// P3 = 1 - P1 and P4 = 1 - P2, verified exactly by comparing the three
// Laurent coefficients of both sides in z = theta_a(lambda) within
// kLaurentTol (scaled).
//
// Throws PreconditionError for poles in the same half plane or when a
// self-check fails.
std::pair<BasicFactor, BasicFactor> reverse_pair(const BasicFactor& f1,
                                                 const BasicFactor& f2);

// Result of reordering s * u into (upper)(lower): right = s |> u keeps u's
// pole positions, left = s <| u keeps s's.
struct Reordering {
  MeromorphicLoop right;
  MeromorphicLoop left;
};

// Requires s entirely in the lower family, u entirely in the upper family,
// and no pole of u within the degenerate guard of the conjugate of a pole
// of s (conjugate pole positions across the lists are outside the domain
// of the actions). Throws PreconditionError otherwise.
Reordering act(const MeromorphicLoop& s, const MeromorphicLoop& u);
MeromorphicLoop act_right(const MeromorphicLoop& s, const MeromorphicLoop& u);
MeromorphicLoop act_left(const MeromorphicLoop& s, const MeromorphicLoop& u);

// count real samples in [-10, 10], reproducible from the seed, each more
// than kLambdaGap away from every value in avoid.
std::vector<double> sample_lambdas(std::uint64_t seed, int count,
                                   const std::vector<double>& avoid);

// Real parts of every pole of every listed loop, for sample exclusion.
std::vector<double> pole_real_parts(
    const std::vector<const MeromorphicLoop*>& loops);

// Max Frobenius distance of the two loop values over the sample points.
double loop_distance(const MeromorphicLoop& a, const MeromorphicLoop& b,
                     const std::vector<double>& lambdas);

// Max Frobenius deviation of Phi(lambda)' Phi(lambda) from the identity.
double unitarity_residual(const MeromorphicLoop& loop,
                          const std::vector<double>& lambdas);

// Outcome of a sampled numeric verification: one entry per identity with
// the max residual seen across all samples and evaluation points.
struct NumericCheck {
  std::string rule;
  double max_residual = 0.0;
  double tol = 0.0;
  bool passed = true;
  std::string note;
};

struct NumericReport {
  std::uint64_t seed = 0;
  int sample_count = 0;
  bool passed = true;
  std::vector<NumericCheck> checks;

  const NumericCheck* find(std::string_view rule) const;
  bool rule_passed(std::string_view rule) const;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Sample tuple for the matched-pair identities: s, t in the lower family,
// u, v in the upper family.
struct MatchedLoopSample {
  MeromorphicLoop s;
  MeromorphicLoop t;
  MeromorphicLoop u;
  MeromorphicLoop v;
};

// Sample pair for the mutual-inverse identities: s lower, u upper.
struct InverseLoopSample {
  MeromorphicLoop s;
  MeromorphicLoop u;
};

// Evaluates both sides of each matched-pair identity at n_lambda seeded
// real points and records the max residual per rule:
//   right-over-m-product   s |> (t |> u) = st |> u
//   left-over-m-product    (s <| (t |> u))(t <| u) = st <| u
//   right-over-g-product   s |> uv = (s |> u)((s <| u) |> v)
//   left-over-g-product    (s <| u) <| v = s <| uv
//   involution-right       (s <| u)^i |> (s |> u)^i = u^i
//   involution-left        (s <| u)^i <| (s |> u)^i = s^i
// A sample violating the action preconditions fails the extra rule
// "preconditions" with the reason in its note; residuals for the remaining
// samples are still reported. Throws std::invalid_argument for tol <= 0 or
// n_lambda < 1.
NumericReport verify_matched_numeric(
    const std::vector<MatchedLoopSample>& samples, int n_lambda, double tol,
    std::uint64_t seed);

// Same sampling scheme for the mutual-inverse identities:
//   inverse-action-right   u^{-1} |> s^{-1} = (s <| u)^{-1}
//   inverse-action-left    u^{-1} <| s^{-1} = (s |> u)^{-1}
//   inverse-i-commute      (x^{-1})^i = (x^i)^{-1} for x = s, u
//   unitarity              on s, u, their inverses and both action parts
// plus the same "preconditions" rule.
NumericReport verify_mutually_inverse_numeric(
    const std::vector<InverseLoopSample>& samples, int n_lambda, double tol,
    std::uint64_t seed);

// JSON form: { "n": 2, "factors": [ { "alphaRe": 0.0, "alphaIm": 1.0,
// "P": [[[re, im], ...], ...] } ] }. Parsing throws ParseError on any
// malformed or inadmissible input.
nlohmann::json loop_to_json(const MeromorphicLoop& loop);
MeromorphicLoop loop_from_json(const nlohmann::json& doc);
MeromorphicLoop parse_loop_file(const std::string& path);

}  // namespace almosthopf

#endif
