#include <algorithm>
#include <fstream>
#include <sstream>

#include "lpi/errors.hpp"
#include "lpi/qseries.hpp"

namespace lpi {

namespace {

struct IdentityEntry {
  const char* name;
  const char* preset;
  const char* target;
};

const IdentityEntry kIdentities[] = {
    {"type-i-1", "type-i", "min1"},      {"type-i-2", "type-i", "min2"},
    {"type-i-3", "type-i", "min3"},      {"type-ii-1", "type-ii", "min1"},
    {"type-ii-2", "type-ii", "min2"},    {"type-ii-a", "type-ii", "once1"},
    {"type-iii-1", "type-iii", "min1"},  {"type-iii-2", "type-iii", "min2"},
    {"type-iii-a", "type-iii", "once1"}, {"type-iv-1", "type-iv", "min1"},
    {"type-iv-a", "type-iv", "once1"},   {"type-iv-b", "type-iv", "min2once2"},
};

} // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& e : kIdentities) out.emplace_back(e.name);
  return out;
}

std::pair<std::string, std::string> identity_target(const std::string& name) {
  for (const auto& e : kIdentities)
    if (name == e.name) return {e.preset, e.target};
  throw UnknownName("unknown identity '" + name + "'");
}

bool VerifyReport::ok() const {
  if (!error.empty() || stages.empty()) return false;
  for (const auto& s : stages)
    if (!s.ok) return false;
  return true;
}

VerifyReport verify_identity(const std::string& name, const VerifyOptions& opt) {
  if (opt.D < 1 || opt.N < 1 || opt.prefix < 1) throw InvalidArgument("orders must be positive");
  const auto [preset_name, target] = identity_target(name);
  VerifyReport rep;
  rep.name = name;
  auto stage = [&](const std::string& st, bool ok, const std::string& detail) {
    rep.stages.push_back({st, ok, detail});
  };
  try {
    const IdealSpec spec = preset(preset_name);
    const auto counts = count_series(spec.with_target(target), opt.D, opt.N);
    const QDiffSystem sys = merge_proportional(build_system(spec));
    const auto series = target_series(sys, target, opt.D, opt.N);
    stage("enumerate", counts == series, "transfer series equal enumeration through x^" +
                                              std::to_string(opt.D) + ", q^" + std::to_string(opt.N - 1));

    const QDiffEquation eq = eliminate_target(sys, target);
    rep.equation = eq;
    stage("eliminate", check_annihilation(eq, series), "order " + std::to_string(eq.order()));

    const HoloSequence g{rec_from_qdiff(eq), {RationalQ(1)}};
    stage("recurrence", true, "order " + std::to_string(g.rec.order()));

    const int P = std::max(opt.prefix, g.rec.order() + 1);
    const auto gv = unroll(g, P - 1);
    bool unroll_ok = true;
    for (int M = 0; M <= std::min(opt.D, P - 1); ++M)
      unroll_ok = unroll_ok && expand_q(gv[M], opt.N) == counts[M];
    stage("unroll", unroll_ok, std::to_string(P) + " values");

    AndrewsSum sum;
    if (opt.sum_file.empty()) {
      sum = load_sum(name);
    } else {
      std::ifstream in(opt.sum_file);
      if (!in) throw InvalidArgument("cannot open " + opt.sum_file);
      std::stringstream ss;
      ss << in.rdbuf();
      sum = parse_sum(ss.str());
    }
    const auto gt = andrews_expand(sum, P - 1);
    bool expand_ok = true;
    for (int M = 0; M <= std::min(opt.D, P - 1); ++M)
      expand_ok = expand_ok && expand_q(gt[M], opt.N) == counts[M];
    stage("expand", expand_ok, "multi-sum through x^" + std::to_string(P - 1));

    // a stated recurrence belongs to the shipped multi-sum only
    const auto stated = opt.sum_file.empty() ? load_stated_recurrence(name) : std::nullopt;
    const Certificate cert = prove_equal(g, gt, stated, P);
    rep.certificate = cert;
    stage("prove", cert.complete(),
          "order " + std::to_string(cert.order) + " via " + cert.source);
  } catch (const Error& e) {
    rep.error = e.what();
    rep.error_kind = e.kind();
  }
  return rep;
}

} // namespace lpi

namespace lpi {

namespace {

SeriesQ class_totals(const IdealSpec& spec, int N) {
  const auto t = weight_totals(enumerate(spec, N - 1));
  SeriesQ s(N);
  for (int n = 0; n < N && n < static_cast<int>(t.size()); ++n) s[n] = Rat(static_cast<long>(t[n]));
  return s;
}

SeriesQ residue_product(int m, const std::vector<int>& residues, int N) {
  SeriesQ s = SeriesQ::one(N);
  for (int k = 1; k < N; ++k)
    if (std::find(residues.begin(), residues.end(), k % m) != residues.end()) s.div_one_minus(k);
  return s;
}

SeriesComparison compare(const std::string& lhs, const SeriesQ& a, const std::string& rhs, const SeriesQ& b) {
  SeriesComparison c{lhs, rhs, a == b, -1};
  if (!c.equal)
    for (int i = 0; i < a.order(); ++i)
      if (a[i] != b[i]) {
        c.first_difference = i;
        break;
      }
  return c;
}

struct SeriesEntry {
  const char* name;
  int front;  // 0: no 2phi1; 1: (-q;q)(-q^3;q^6); 2: (-q^2;q)(-q^3;q^6)
  Phi21Spec phi;
  int modulus;
  std::vector<int> residues;
};

const std::vector<SeriesEntry>& series_entries() {
  static const std::vector<SeriesEntry> e = {
      {"type-iii-1", 1, {-1, 1, 2, 6, -1, 3}, 0, {}},
      {"type-iii-2", 2, {1, 5, 8, 6, -1, 3}, 0, {}},
      {"type-iv-1", 1, {-1, 1, 4, 6, -1, 3}, 0, {}},
      {"type-iv-a", 1, {1, 5, 4, 6, -1, 3}, 0, {}},
      {"type-iii-a", 0, {}, 12, {1, 3, 4, 6, 7, 10, 11}},
      {"type-iv-b", 0, {}, 12, {2, 3, 5, 6, 7, 8, 11}},
      {"type-i-mod9", 0, {}, 9, {1, 3, 6, 8}},
  };
  return e;
}

} // namespace

bool SeriesCheck::ok() const {
  if (comparisons.empty()) return false;
  for (const auto& c : comparisons)
    if (!c.equal) return false;
  return true;
}

std::vector<std::string> series_check_names() {
  std::vector<std::string> out;
  for (const auto& e : series_entries()) out.emplace_back(e.name);
  return out;
}

SeriesCheck check_series_identity(const std::string& name, int N) {
  if (N < 1) throw InvalidArgument("q-order must be positive");
  for (const auto& e : series_entries()) {
    if (name != e.name) continue;
    SeriesCheck out{name, N, {}};
    if (name == "type-i-mod9") {
      out.comparisons.push_back(compare("enumeration", class_totals(presets::type_i(), N), "product",
                                        residue_product(e.modulus, e.residues, N)));
      return out;
    }
    const auto [p, target] = identity_target(name);
    const SeriesQ sum = andrews_at_one(load_sum(name), N);
    out.comparisons.push_back(compare("multi-sum", sum, "enumeration", class_totals(preset(p).with_target(target), N)));
    if (e.front) {
      const SeriesQ front = pochhammer(e.front, 1, kInfinite, N, -1) * pochhammer(3, 6, kInfinite, N, -1);
      out.comparisons.push_back(compare("multi-sum", sum, "2phi1", front * phi21_expand(e.phi, N)));
    } else {
      out.comparisons.push_back(compare("multi-sum", sum, "product", residue_product(e.modulus, e.residues, N)));
    }
    return out;
  }
  throw UnknownName("no series check named '" + name + "'");
}

} // namespace lpi
