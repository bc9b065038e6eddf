#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpi/holo.hpp"
#include "lpi/series.hpp"

namespace lpi {

constexpr int kInfinite = -1;

// prod_{j<n} (1 - sign q^{B + jA}) truncated at q^N; n = kInfinite takes
// every factor below q^N.
SeriesQ pochhammer(int B, int A, int n, int N, long sign = 1);
// the same finite product as an exact polynomial
PolyQ pochhammer_poly(int B, int A, int n);
// prod_{j<n} (1 - q^{e + j step}) with any integer exponents
RationalQ pochhammer_exact(int e, int step, int n);

// sum over n >= 0 of (-1)^{L1.n} q^{n.Q.n + L2.n} x^{L3.n} / prod_i (q^{B_i}; q^{A_i})_{n_i}
struct AndrewsSum {
  std::string name;
  std::vector<std::vector<Rat>> Q;  // symmetric
  std::vector<Int> L1;
  std::vector<Rat> L2;
  std::vector<int> L3;
  std::vector<std::pair<int, int>> bases;  // (A_i, B_i)

  int r() const { return static_cast<int>(bases.size()); }
  // exponent of q at n; NonIntegralExponent unless it is an integer
  long exponent(const std::vector<int>& n) const;
  bool negative(const std::vector<int>& n) const;
  void validate() const;
  friend bool operator==(const AndrewsSum&, const AndrewsSum&) = default;
};

// Exact coefficients of x^0..x^M. Every L3 coefficient must be positive.
std::vector<RationalQ> andrews_expand(const AndrewsSum& s, int M);
// The sum at x = 1 truncated at q^N; needs Q entries >= 0 and each
// Q_ii v^2 + L2_i v to grow without bound.
SeriesQ andrews_at_one(const AndrewsSum& s, int N);

// 2phi1(q^a0, q^a1; q^b1; q^base, z_sign q^z_exp)
struct Phi21Spec {
  int a0 = 0, a1 = 0, b1 = 0;
  int base = 1;
  int z_sign = 1;
  int z_exp = 1;
};
SeriesQ phi21_expand(const Phi21Spec& spec, int N);

// A(x) = (1 + q^a + x^2 q^b + x^2 q^c) A(x q^3)
//        - q^a (1 + x^2 q^{b+c-a-d+6}) (1 + x^2 q^d) A(x q^6)
struct FunctionalSolution {
  std::vector<RationalQ> forward;  // alpha_0..alpha_M from the coefficient recurrence
  std::vector<RationalQ> closed;   // the same from the product-times-series form
  int lift = 0;                    // q^lift * alpha_n is a power series for all n
  std::vector<SeriesQ> forward_series, closed_series;  // q^lift * alpha_n to q^N
  bool agree() const { return forward == closed && forward_series == closed_series; }
};
FunctionalSolution solve_functional(int a, int b, int c, int d, const RationalQ& alpha0,
                                    const RationalQ& alpha1, int M, int N);

// Search box for guess(). Base pairs are drawn as multisets of size r from
// `bases`, gradings L3 from {1..max_l3}^r, signs L1 from {0,1}^r when
// `signs` is set. Q and L2 are solved from the first values of the target.
struct GuessSpace {
  int max_r = 3;
  std::vector<std::pair<int, int>> bases = {{1, 1}, {2, 2}, {3, 3}, {2, 1}};
  int max_l3 = 3;
  bool signs = false;
  Rat max_abs = Rat(12);  // bound on |Q_ij| and |L2_i|
  int depth = 6;          // x-degrees compared
  int q_order = 60;       // q-order of the comparison
  int jobs = 1;
};
// Candidates matching target[0..depth] (coefficients of x^M as series to
// q^q_order), ranked by (r, sum |Q_ij|, sum |L2_i|, search index).
std::vector<AndrewsSum> guess(const std::vector<SeriesQ>& target, const GuessSpace& space);
std::vector<AndrewsSum> guess(const std::vector<RationalQ>& target, const GuessSpace& space);

std::string data_dir();
AndrewsSum parse_sum(const std::string& json_text);
std::string sum_to_json(const AndrewsSum& s);
AndrewsSum load_sum(const std::string& name);  // data_dir()/sums/<name>.json
// Recurrence stated for the multi-sum side of an identity, when one ships.
std::optional<Recurrence> load_stated_recurrence(const std::string& name);

// The twelve identities: name -> (preset, target)
std::vector<std::string> identity_names();
std::pair<std::string, std::string> identity_target(const std::string& name);

// Series-level checks at x = 1 to q^N: the multi-sum, the enumeration of
// the class and a closed side (a product times a 2phi1, or a pure product).
struct SeriesComparison {
  std::string lhs, rhs;
  bool equal = false;
  int first_difference = -1;  // lowest differing q-power, -1 when equal
};
struct SeriesCheck {
  std::string name;
  int N = 0;
  std::vector<SeriesComparison> comparisons;
  bool ok() const;
};
// "type-iii-1", "type-iii-2", "type-iv-1", "type-iv-a" (2phi1 sides),
// "type-iii-a", "type-iv-b" (product sides), "type-i-mod9" (enumeration
// against the mod 9 product only)
std::vector<std::string> series_check_names();
SeriesCheck check_series_identity(const std::string& name, int N);

struct VerifyOptions {
  int D = 8;        // x-degree of the series checks
  int N = 60;       // q-order of the series checks
  int prefix = 20;  // values compared exactly
  std::string sum_file;  // overrides the shipped multi-sum
};

struct StageReport {
  std::string stage;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::vector<StageReport> stages;
  std::optional<QDiffEquation> equation;
  std::optional<Certificate> certificate;
  std::string error;       // set when a stage threw
  std::string error_kind;  // the error class name
  bool ok() const;
};
VerifyReport verify_identity(const std::string& name, const VerifyOptions& opt = {});

} // namespace lpi
