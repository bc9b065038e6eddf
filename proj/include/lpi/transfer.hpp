#pragma once

#include <string>
#include <vector>

#include "lpi/birat.hpp"
#include "lpi/partitions.hpp"
#include "lpi/series.hpp"

namespace lpi {

// G(x) = prefactor(x) * F_state(x q^shift) for a restricted subset.
struct SystemTarget {
  std::string name;
  Restriction restriction;
  int state = 0;
  BiRat prefactor = BiRat(1);
  int shift = 0;
};

// F_i(x) = sum_j P[i][j](x) F_j(x q^m), one state per (surviving) tail.
struct QDiffSystem {
  int m = 1;
  std::vector<std::string> labels;
  std::vector<std::vector<BiRat>> P;
  std::vector<SystemTarget> targets;

  int size() const { return static_cast<int>(P.size()); }
  int state_index(const std::string& label) const;  // -1 when absent
  const SystemTarget& target(const std::string& name) const;
};

// One state per tail with F_pi(x) = x^{#pi} q^{|pi|} sum_{w in L(pi)} F_w(x q^m).
// Each declared restriction is resolved to the lightest tail whose linking set
// is exactly the set of tails the restriction admits.
QDiffSystem build_system(const TailTable& table,
                         const std::vector<std::pair<std::string, Restriction>>& targets);
QDiffSystem build_system(const IdealSpec& spec);

// Merges states whose rows agree up to a monomial factor into the first
// (lightest) state of each class; targets are rewritten onto survivors.
QDiffSystem merge_proportional(const QDiffSystem& system);

// Coefficients of x^0..x^D of F_state, each to q^N. The solution is fixed by
// F_0(0) = 1 on the first state.
std::vector<SeriesQ> system_series(const QDiffSystem& system, int state, int D, int N);
// Same for a declared target.
std::vector<SeriesQ> target_series(const QDiffSystem& system, const std::string& target, int D,
                                   int N);

// Enumeration counts as per-x-power series, lengths 0..D, weights < N.
std::vector<SeriesQ> count_series(const IdealSpec& spec, int D, int N);

} // namespace lpi
