#include "lpi/partitions.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "lpi/errors.hpp"

namespace lpi {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int v : parts)
    if (v <= 0) throw InvalidArgument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

Partition operator+(const Partition& a, const Partition& b) {
  Partition r;
  r.parts.resize(a.parts.size() + b.parts.size());
  std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), r.parts.begin(),
             std::greater<int>());
  return r;
}

Partition Partition::shifted(int k) const {
  Partition r = *this;
  for (int& v : r.parts) v += k;
  return r;
}

bool operator<(const Partition& a, const Partition& b) {
  const int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.length() != b.length()) return a.length() < b.length();
  return a.parts < b.parts;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(p.parts[i]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "0" || t == "()" || t == "empty") return Partition();
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, '+')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad partition: " + text);
    }
  }
  return Partition(std::move(parts));
}

bool Restriction::admits(const Partition& p) const {
  if (!p.empty() && p.smallest() < min_part) return false;
  if (at_most_once > 0 && p.multiplicity(at_most_once) > 1) return false;
  return true;
}

std::string to_string(const Restriction& r) {
  std::string s = "min_part=" + std::to_string(r.min_part);
  if (r.at_most_once) s += ",at_most_once=" + std::to_string(r.at_most_once);
  return s;
}

IdealSpec IdealSpec::base() const {
  IdealSpec s = *this;
  s.restriction = Restriction{};
  return s;
}

const Restriction& IdealSpec::target(const std::string& name) const {
  for (const auto& [n, r] : targets)
    if (n == name) return r;
  throw UnknownName("ideal '" + this->name + "' has no target '" + name + "'");
}

IdealSpec IdealSpec::with_target(const std::string& name) const {
  IdealSpec s = *this;
  s.restriction = target(name);
  return s;
}

namespace presets {

namespace {
IdealSpec make(std::string name, std::vector<DistanceRule> d, std::vector<JunctionRule> j, int m,
               std::vector<std::pair<std::string, Restriction>> targets) {
  IdealSpec s;
  s.name = std::move(name);
  s.distance_rules = std::move(d);
  s.junction_rules = std::move(j);
  s.modulus = m;
  s.targets = std::move(targets);
  return s;
}
} // namespace

IdealSpec type_i() {
  return make("type-i", {{2, 3}}, {{1, 1, 3, 0}}, 3,
              {{"min1", {1, 0}}, {"min2", {2, 0}}, {"min3", {3, 0}}});
}
IdealSpec type_ii() {
  return make("type-ii", {{2, 3}}, {{1, 1, 3, 2}}, 3,
              {{"min1", {1, 0}}, {"min2", {2, 0}}, {"once1", {1, 1}}});
}
IdealSpec type_iii() {
  return make("type-iii", {{3, 3}}, {{2, 1, 3, 1}}, 3,
              {{"min1", {1, 0}}, {"min2", {2, 0}}, {"once1", {1, 1}}});
}
IdealSpec type_iv() {
  return make("type-iv", {{3, 3}}, {{2, 1, 3, 2}}, 3,
              {{"min1", {1, 0}}, {"once1", {1, 1}}, {"min2once2", {2, 2}}});
}
IdealSpec rogers_ramanujan() {
  return make("rogers-ramanujan", {{1, 2}}, {}, 2, {{"min1", {1, 0}}, {"min2", {2, 0}}});
}
IdealSpec distinct() { return make("distinct", {{1, 1}}, {}, 1, {{"min1", {1, 0}}}); }
IdealSpec gordon(int k) {
  if (k < 2) throw InvalidArgument("gordon needs k >= 2");
  return make("gordon-" + std::to_string(k), {{k - 1, 2}}, {}, 1, {{"min1", {1, 0}}});
}
IdealSpec gollnitz_gordon() {
  return make("gollnitz-gordon", {{1, 2}}, {{1, 2, 4, 0}}, 2, {{"min1", {1, 0}}});
}
IdealSpec unrestricted() { return make("unrestricted", {}, {}, 1, {{"min1", {1, 0}}}); }

} // namespace presets

std::vector<std::string> preset_names() {
  return {"type-i",   "type-ii",  "type-iii",        "type-iv",     "rogers-ramanujan",
          "distinct", "gordon-3", "gollnitz-gordon", "unrestricted"};
}

IdealSpec preset(const std::string& name) {
  if (name == "type-i") return presets::type_i();
  if (name == "type-ii") return presets::type_ii();
  if (name == "type-iii") return presets::type_iii();
  if (name == "type-iv") return presets::type_iv();
  if (name == "rogers-ramanujan") return presets::rogers_ramanujan();
  if (name == "distinct") return presets::distinct();
  if (name == "gollnitz-gordon") return presets::gollnitz_gordon();
  if (name == "unrestricted") return presets::unrestricted();
  if (name.rfind("gordon-", 0) == 0) {
    try {
      return presets::gordon(std::stoi(name.substr(7)));
    } catch (const std::invalid_argument&) {
    }
  }
  throw UnknownName("unknown ideal preset '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<int>> int_tuples(const std::string& v, std::size_t arity,
                                         const std::string& key) {
  static const std::regex tuple(R"(\(([^()]*)\))");
  std::vector<std::vector<int>> out;
  for (auto it = std::sregex_iterator(v.begin(), v.end(), tuple); it != std::sregex_iterator();
       ++it) {
    std::vector<int> t;
    std::stringstream ss((*it)[1].str());
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        t.push_back(std::stoi(trim(item)));
      } catch (const std::exception&) {
        throw ParseError("bad integer in " + key + ": " + v);
      }
    }
    if (t.size() != arity) throw ParseError(key + " expects " + std::to_string(arity) + "-tuples");
    out.push_back(t);
  }
  if (out.empty()) throw ParseError(key + " expects tuples like (1,2)");
  return out;
}

int to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    int r = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ParseError("bad integer for " + key + ": " + v);
  }
}

Restriction parse_restriction(const std::string& v) {
  Restriction r;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad restriction: " + v);
    std::string k = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
    if (k == "min_part") r.min_part = to_int(val, k);
    else if (k == "at_most_once") r.at_most_once = to_int(val, k);
    else throw ParseError("unknown restriction key: " + k);
  }
  return r;
}

} // namespace

IdealSpec parse_spec(const std::string& text) {
  IdealSpec s;
  s.name = "custom";
  bool have_targets = false;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value: " + line);
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "preset") {
      s = preset(val);
    } else if (key == "name") {
      s.name = val;
    } else if (key == "modulus") {
      s.modulus = to_int(val, key);
    } else if (key == "distance") {
      for (auto& t : int_tuples(val, 2, key)) s.distance_rules.push_back({t[0], t[1]});
    } else if (key == "junction") {
      for (auto& t : int_tuples(val, 4, key)) s.junction_rules.push_back({t[0], t[1], t[2], t[3]});
    } else if (key == "min_part") {
      s.restriction.min_part = to_int(val, key);
    } else if (key == "at_most_once") {
      s.restriction.at_most_once = to_int(val, key);
    } else if (key == "target") {
      auto colon = val.find(':');
      if (colon == std::string::npos) throw ParseError("target expects name:restriction");
      if (!have_targets) s.targets.clear();
      have_targets = true;
      s.targets.emplace_back(trim(val.substr(0, colon)), parse_restriction(val.substr(colon + 1)));
    } else {
      throw ParseError("unknown key: " + key);
    }
  }
  if (s.modulus < 1) throw InvalidArgument("modulus must be at least 1");
  for (const auto& d : s.distance_rules)
    if (d.k < 1) throw InvalidArgument("distance rules need k >= 1");
  for (const auto& j : s.junction_rules)
    if (j.w < 1 || j.modulus < 1) throw InvalidArgument("junction rules need w >= 1 and mod >= 1");
  if (s.targets.empty()) s.targets.push_back({"min1", Restriction{}});
  return s;
}

IdealSpec load_spec(const std::string& name_or_path) {
  for (const auto& n : preset_names())
    if (n == name_or_path) return preset(n);
  if (name_or_path.rfind("gordon-", 0) == 0) return preset(name_or_path);
  std::ifstream f(name_or_path);
  if (!f) throw UnknownName("no preset or spec file named '" + name_or_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_spec(ss.str());
}

namespace {

// Rules whose window ends at the last part of p.
bool ok_at_end(const IdealSpec& spec, const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  const int last = n - 1;
  for (const auto& r : spec.distance_rules) {
    const int i = last - r.k;
    if (i >= 0 && p[i] - p[last] < r.d) return false;
  }
  for (const auto& r : spec.junction_rules) {
    const int i = last - r.w;
    if (i < 0 || p[i] - p[last] > r.gap) continue;
    long sum = 0;
    for (int j = i; j <= last; ++j) sum += p[j];
    long res = ((sum - r.residue) % r.modulus + r.modulus) % r.modulus;
    if (res != 0) return false;
  }
  return true;
}

struct Walker {
  const IdealSpec& spec;
  int n_max;
  const std::function<void(const std::vector<int>&, int)>& visit;
  std::vector<int> parts;

  // parts are appended in weakly decreasing order
  void run(int weight) {
    visit(parts, weight);
    const int top = parts.empty() ? n_max - weight : std::min(parts.back(), n_max - weight);
    const int low = std::max(1, spec.restriction.min_part);
    for (int v = top; v >= low; --v) {
      if (spec.restriction.at_most_once == v && !parts.empty() && parts.back() == v) continue;
      parts.push_back(v);
      if (ok_at_end(spec, parts)) run(weight + v);
      parts.pop_back();
    }
  }
};

void walk(const IdealSpec& spec, int n_max,
          const std::function<void(const std::vector<int>&, int)>& visit) {
  Walker w{spec, n_max, visit, {}};
  w.run(0);
}

} // namespace

bool is_member(const IdealSpec& spec, const Partition& p) {
  if (!spec.restriction.admits(p)) return false;
  std::vector<int> prefix;
  prefix.reserve(p.parts.size());
  for (int v : p.parts) {
    prefix.push_back(v);
    if (!ok_at_end(spec, prefix)) return false;
  }
  return true;
}

Partition tail_of(const Partition& p, int m) {
  if (m < 1) throw InvalidArgument("tail modulus must be at least 1");
  Partition r;
  for (int v : p.parts)
    if (v <= m) r.parts.push_back(v);
  return r;
}

std::vector<Partition> compute_tails(const IdealSpec& spec, int max_length) {
  const IdealSpec b = spec.base();
  std::vector<Partition> out;
  std::vector<int> parts;
  const int m = b.modulus;
  std::function<void()> rec = [&]() {
    out.push_back(Partition{});
    out.back().parts = parts;
    if (static_cast<int>(parts.size()) >= max_length)
      throw TailSetInfinite("tail enumeration exceeded length " + std::to_string(max_length),
                            max_length);
    const int top = parts.empty() ? m : parts.back();
    for (int v = top; v >= 1; --v) {
      parts.push_back(v);
      if (ok_at_end(b, parts)) rec();
      parts.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

int TailTable::index_of(const Partition& p) const {
  auto it = std::find(tails.begin(), tails.end(), p);
  return it == tails.end() ? -1 : static_cast<int>(it - tails.begin());
}

namespace {

// Counts by (length, weight) of partitions assembled block by block from
// linked tails; equals the enumeration exactly when the ideal is linked.
CountTable assembled_counts(const TailTable& t, int n_max) {
  const int k = static_cast<int>(t.tails.size());
  const int m = t.modulus;
  int max_len = 0;
  for (const auto& p : t.tails) max_len = std::max(max_len, p.length());
  const int len_cap = n_max + 1;
  // state[tail][len][weight]
  using Grid = std::vector<std::vector<long long>>;
  std::vector<Grid> cur(k, Grid(len_cap + 1, std::vector<long long>(n_max + 1, 0)));
  for (int i = 0; i < k; ++i) {
    const int w = t.tails[i].weight(), l = t.tails[i].length();
    if (w <= n_max && l <= len_cap) cur[i][l][w] += 1;
  }
  CountTable total(len_cap + 1, std::vector<long long>(n_max + 1, 0));
  // block b (0-based) adds b*m to every part; no nonempty block fits once b*m >= n_max
  for (int b = 1; b * m < n_max + 1; ++b) {
    std::vector<Grid> next(k, Grid(len_cap + 1, std::vector<long long>(n_max + 1, 0)));
    for (int i = 0; i < k; ++i)
      for (int j : t.linking[i]) {
        const int w = t.tails[j].weight() + b * m * t.tails[j].length();
        const int l = t.tails[j].length();
        if (w > n_max) continue;
        for (int L = 0; L + l <= len_cap; ++L)
          for (int n = 0; n + w <= n_max; ++n)
            if (cur[i][L][n]) next[j][L + l][n + w] += cur[i][L][n];
      }
    cur.swap(next);
  }
  for (int i = 0; i < k; ++i)
    for (int L = 0; L <= len_cap; ++L)
      for (int n = 0; n <= n_max; ++n) total[L][n] += cur[i][L][n];
  (void)max_len;
  return total;
}

} // namespace

TailTable compute_linking(const IdealSpec& spec, int check_weight) {
  const IdealSpec b = spec.base();
  TailTable t;
  t.modulus = b.modulus;
  t.tails = compute_tails(b);
  const int k = static_cast<int>(t.tails.size());
  t.linking.assign(k, {});
  t.spans.assign(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (is_member(b, t.tails[i] + t.tails[j].shifted(b.modulus))) t.linking[i].push_back(j);
  if (check_weight > 0) {
    CountTable direct = enumerate(b, check_weight);
    CountTable built = assembled_counts(t, check_weight);
    direct.resize(built.size(), std::vector<long long>(check_weight + 1, 0));
    for (std::size_t L = 0; L < built.size(); ++L)
      for (int n = 0; n <= check_weight; ++n)
        if (built[L][n] != direct[L][n])
          throw LocalityViolation("linking sets of '" + b.name +
                                      "' disagree with enumeration at length " +
                                      std::to_string(L) + ", weight " + std::to_string(n),
                                  n);
  }
  return t;
}

CountTable enumerate(const IdealSpec& spec, int n_max) {
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  CountTable c(n_max + 2, std::vector<long long>(n_max + 1, 0));
  walk(spec, n_max, [&](const std::vector<int>& p, int w) { c[p.size()][w] += 1; });
  return c;
}

void for_each_member(const IdealSpec& spec, int n_max,
                     const std::function<void(const Partition&)>& f) {
  Partition tmp;
  walk(spec, n_max, [&](const std::vector<int>& p, int) {
    tmp.parts = p;
    f(tmp);
  });
}

std::vector<long long> weight_totals(const CountTable& c) {
  std::vector<long long> out(c.empty() ? 0 : c[0].size(), 0);
  for (const auto& row : c)
    for (std::size_t n = 0; n < row.size(); ++n) out[n] += row[n];
  return out;
}

} // namespace lpi
