#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpi/birat.hpp"
#include "lpi/elim.hpp"

namespace lpi {

// sum_i coeffs[i](q, q^M) * g(M + i) = 0 for M >= 0. Coefficients live in
// Z[q][S] with S standing for q^M; BiPoly's x slot holds S.
struct Recurrence {
  std::vector<BiPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const BiPoly& lead() const { return coeffs.back(); }
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// Drops leading zeros, clears denominators, removes the common factor and
// makes the lowest term of the leading coefficient positive.
Recurrence normalize_recurrence(const std::vector<BiRat>& coeffs);

// coefficient i evaluated at S = q^M
RationalQ eval_at(const BiPoly& c, int M);

// Values g(0), g(1), ... Initial lists shorter than the order are extended
// by applying the relation at negative M with g = 0 below index 0, which is
// how recurrences read off a q-difference equation start.
struct HoloSequence {
  Recurrence rec;
  std::vector<RationalQ> initials;
};

// Coefficient recurrence of G(x) = sum_M g(M) x^M; it holds for M >= -J with
// J the x-degree of the equation, so one initial value g(0) fixes g.
Recurrence rec_from_qdiff(const QDiffEquation& eq);

// g(0..N)
std::vector<RationalQ> unroll(const HoloSequence& seq, int N);

// True iff the relation holds at every M with M + order inside the prefix.
bool check_annihilates(const Recurrence& rec, const std::vector<RationalQ>& prefix);

// Annihilator of every u + v with u a solution of a and v one of b. The
// order is searched upward from max(order a, order b); `searched` receives
// the order found.
Recurrence plus_closure(const Recurrence& a, const Recurrence& b, int* searched = nullptr);

// For M > bound every exponent a + b M over the monomials q^a S^b of the
// leading coefficient is distinct, so it cannot vanish there; M = 0..bound+extra
// are evaluated directly.
struct NonvanishingReport {
  int bound = 0;
  std::vector<int> checked;
  int first_zero = -1;  // smallest checked M with a vanishing value, -1 if none
  bool complete() const { return first_zero < 0; }
};
NonvanishingReport leading_nonvanishing(const Recurrence& rec, int extra = 5);

struct Certificate {
  Recurrence rec;            // annihilates g - g~
  int order = 0;
  // "closure" when built from recurrences of both sides, "prefix" when the
  // recurrence of the first side was checked against the second side's prefix
  std::string source;
  bool rec_ok = false;       // annihilation checks on both prefixes passed
  int prefix = 0;            // compared prefix length
  std::vector<int> zero_initials;  // M with g(M) - g~(M) verified zero
  NonvanishingReport nonvanishing;
  bool complete() const {
    return rec_ok && static_cast<int>(zero_initials.size()) >= order && nonvanishing.complete();
  }
};

// Compares A with the values b(0..) (at least max(order, n_check) of them).
// b_rec, when given, is a recurrence for b that is verified on the prefix and
// combined with A's by plus_closure. Throws InitialMismatch at the first M
// where the values differ.
Certificate prove_equal(const HoloSequence& A, const std::vector<RationalQ>& b,
                        const std::optional<Recurrence>& b_rec, int n_check);

} // namespace lpi
