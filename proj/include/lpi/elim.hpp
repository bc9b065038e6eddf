#pragma once

#include <string>
#include <vector>

#include "lpi/transfer.hpp"

namespace lpi {

// sum_i coeffs[i](x, q) * G(x q^{i m}) = 0
struct QDiffEquation {
  int m = 1;
  std::vector<BiPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const QDiffEquation&, const QDiffEquation&) = default;
};

struct EliminationTrace {
  int steps = 0;                 // rows turned into the shifted-identity shape
  std::vector<int> order;        // state order after pivot swaps (original indices)
  int shape_checks = 0;          // number of shape assertions that passed
};

// Clears denominators of sum_k c_k G(x q^{k m}), removes the common factor of
// all coefficients and makes the lowest term of the first coefficient
// positive. Leading and trailing zero coefficients are dropped.
QDiffEquation normalize_equation(int m, const std::vector<BiRat>& coeffs);

// Reduces the system to one equation for state `target`.
QDiffEquation eliminate(const QDiffSystem& system, int target, EliminationTrace* trace = nullptr);

// Equation for G(x) = prefactor(x) * F(x q^shift) from an equation for F.
QDiffEquation rebase_to_target(const QDiffEquation& eq, const BiRat& prefactor, int shift);

// eliminate on the target's state followed by rebase_to_target
QDiffEquation eliminate_target(const QDiffSystem& system, const std::string& target,
                               EliminationTrace* trace = nullptr);

// True when sum_i p_i(x,q) G(x q^{im}) vanishes through x^D and q^N, where
// series[n] is the coefficient of x^n of G to q-order N.
bool check_annihilation(const QDiffEquation& eq, const std::vector<SeriesQ>& series);

} // namespace lpi
