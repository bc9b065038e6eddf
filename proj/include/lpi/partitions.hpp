#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lpi {

// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const;
  int multiplicity(int k) const;
  bool empty() const { return parts.empty(); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int smallest() const { return parts.empty() ? 0 : parts.back(); }

  // parts merged in weakly decreasing order
  friend Partition operator+(const Partition& a, const Partition& b);
  // every part increased by k
  Partition shifted(int k) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // (weight, length, lexicographic)
  friend bool operator<(const Partition& a, const Partition& b);
};

// "3+2+1", or "0" for the empty partition
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

// lambda_i - lambda_{i+k} >= d
struct DistanceRule {
  int k = 1;
  int d = 1;
};

// lambda_i - lambda_{i+w} <= gap implies
// lambda_i + ... + lambda_{i+w} == residue (mod modulus)
struct JunctionRule {
  int w = 1;
  int gap = 0;
  int modulus = 1;
  int residue = 0;
};

// Filters applied on top of the ideal: parts >= min_part, and the value
// at_most_once (when nonzero) occurring at most once.
struct Restriction {
  int min_part = 1;
  int at_most_once = 0;

  bool is_none() const { return min_part <= 1 && at_most_once == 0; }
  bool admits(const Partition& p) const;
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

std::string to_string(const Restriction& r);

struct IdealSpec {
  std::string name;
  std::vector<DistanceRule> distance_rules;
  std::vector<JunctionRule> junction_rules;
  int modulus = 1;
  Restriction restriction;
  // named restricted subsets offered by a preset, in declaration order
  std::vector<std::pair<std::string, Restriction>> targets;

  // the same ideal with the restriction dropped
  IdealSpec base() const;
  // the ideal restricted to a named target
  IdealSpec with_target(const std::string& target) const;
  const Restriction& target(const std::string& name) const;
};

namespace presets {
IdealSpec type_i();
IdealSpec type_ii();
IdealSpec type_iii();
IdealSpec type_iv();
IdealSpec rogers_ramanujan();
IdealSpec distinct();
// lambda_j - lambda_{j+k-1} >= 2
IdealSpec gordon(int k);
// difference >= 2, and difference <= 2 only between two odd parts
IdealSpec gollnitz_gordon();
// unrestricted partitions, for Euler cross-checks
IdealSpec unrestricted();
} // namespace presets

// Accepts "type-i".."type-iv", "rogers-ramanujan", "distinct",
// "gordon-<k>", "gollnitz-gordon", "unrestricted".
IdealSpec preset(const std::string& name);
std::vector<std::string> preset_names();

// Key-value text: one "key = value" per line, '#' comments. Keys: preset,
// name, modulus, distance "(k,d)", junction "(w,gap,mod,res)", min_part,
// at_most_once, target "name:min_part=s,at_most_once=v". Repeated distance
// or junction keys accumulate; lines after a preset refine it.
IdealSpec parse_spec(const std::string& text);
// either a preset name or a path to a spec file
IdealSpec load_spec(const std::string& name_or_path);

bool is_member(const IdealSpec& spec, const Partition& p);
Partition tail_of(const Partition& p, int m);

// Members of the unrestricted ideal with largest part <= modulus, sorted.
std::vector<Partition> compute_tails(const IdealSpec& spec, int max_length = 256);

struct TailTable {
  int modulus = 1;
  std::vector<Partition> tails;
  std::vector<std::vector<int>> linking;  // ascending tail indices
  std::vector<int> spans;

  int index_of(const Partition& p) const;  // -1 when absent
};

// Linking sets by the junction test, cross-checked against enumeration up to
// check_weight; throws LocalityViolation on disagreement.
TailTable compute_linking(const IdealSpec& spec, int check_weight = 24);

// counts[len][n] = number of members of weight n and length len, n <= n_max
using CountTable = std::vector<std::vector<long long>>;
CountTable enumerate(const IdealSpec& spec, int n_max);
// Calls f on every member of weight <= n_max (ascending-by-part generation).
void for_each_member(const IdealSpec& spec, int n_max,
                     const std::function<void(const Partition&)>& f);

// number of members of weight n, summed over lengths
std::vector<long long> weight_totals(const CountTable& c);

} // namespace lpi
