#include "lpi/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lpi/errors.hpp"
#include "lpi/io.hpp"
#include "lpi/text.hpp"

namespace lpi {

namespace {

struct RunConfig {
  std::string ideal;
  std::string target;
  int D = 8;
  int N = 60;
  int prefix = 20;
  std::string output = "json";
  std::string golden;
};

// The payload a command prints, with the reader that canonicalizes a golden
// payload of the same kind.
struct Result {
  Result(Json d, std::string k, std::function<Json(const Json&)> c)
      : doc(std::move(d)), key(std::move(k)), canonical(std::move(c)) {}
  Json doc;
  std::string key;
  std::function<Json(const Json&)> canonical;
  bool refuted = false;
  std::string diagnostic;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AndrewsSum sum_arg(const std::string& name_or_path) {
  if (std::filesystem::is_regular_file(name_or_path)) return parse_sum(read_text(name_or_path));
  return load_sum(name_or_path);
}

int default_q_order() {
  const char* e = std::getenv("LPI_Q_ORDER");
  if (!e || !*e) return 60;
  char* end = nullptr;
  const long v = std::strtol(e, &end, 10);
  if (*end || v < 1 || v > 100000) throw CLI::ValidationError("LPI_Q_ORDER", "must be a positive integer");
  return static_cast<int>(v);
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(path, "{}");
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j) scalar = scalar && !v.is_structured();
    if (scalar && j.size() <= 16 && !j.empty() && !j[0].is_string()) {
      rows.emplace_back(path, j.dump());
      return;
    }
    if (j.empty()) rows.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string as_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  return out;
}

// Exact comparison of canonical text. A golden file holding a full document
// (with "schema") must match byte for byte; a bare payload is read with the
// command's deserializer first.
bool golden_matches(const Result& r, const std::string& file, std::string& why) {
  const Json g = parse_json(read_text(file));
  if (g.contains("schema")) {
    if (dump(g) == dump(r.doc)) return true;
    why = "document differs from " + file;
    return false;
  }
  const Json want = r.canonical ? r.canonical(g) : g;
  const Json& got = r.doc.at(r.key);
  if (dump(want) == dump(got)) return true;
  if (want.contains("coeffs") && got.contains("coeffs")) {
    const auto& a = want.at("coeffs");
    const auto& b = got.at("coeffs");
    if (a.size() != b.size()) {
      why = "order " + std::to_string(b.size() - 1) + " against " + std::to_string(a.size() - 1) + " in " + file;
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) {
        why = "coefficient " + std::to_string(i) + " differs from " + file;
        return false;
      }
  }
  why = r.key + " differs from " + file;
  return false;
}

Json header(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linked partition ideals: transfer systems, q-difference equations and multi-sum identities"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Result()> action;
  int check_weight = 24;
  bool unmerged = false;
  int values = 0;
  std::string sum;
  bool series = false;
  GuessSpace space;
  int limit = 10;
  int depth = 6;
  std::string name, sum_file;
  std::string proof_sum, stated;
  std::vector<std::string> names;
  int a = 0, b = 0, c = 0, d = 0;
  std::string alpha1 = "0";

  try {
    cfg.N = default_q_order();
  } catch (const CLI::Error& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  auto common = [&](CLI::App* s, bool ideal, bool target) {
    if (ideal) s->add_option("--ideal", cfg.ideal, "preset name or spec file")->required();
    if (target) s->add_option("--target", cfg.target, "restricted subset name")->required();
    s->add_option("--degree,-D", cfg.D, "x-degree")->check(CLI::PositiveNumber);
    s->add_option("--order,-N", cfg.N, "q-order")->check(CLI::PositiveNumber);
    s->add_option("--prefix", cfg.prefix, "prefix length")->check(CLI::PositiveNumber);
    s->add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--golden", cfg.golden, "compare against a golden file")->check(CLI::ExistingFile);
  };

  {
    auto* s = app.add_subcommand("tails", "tails of the ideal");
    common(s, true, false);
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        Json tails = Json::array();
        for (const auto& p : compute_tails(spec)) tails.push_back(to_json(p));
        Result r{header("tails"), "tails", nullptr};
        r.doc["ideal"] = spec.name;
        r.doc["tails"] = {{"m", spec.modulus}, {"tails", tails}};
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("linking", "tails with linking sets and spans");
    common(s, true, false);
    s->add_option("--check-weight", check_weight, "weight bound of the enumeration cross-check");
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        Result r{header("linking"), "table", [](const Json& j) { return to_json(tails_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["table"] = to_json(compute_linking(spec, check_weight));
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("system", "transfer system of the ideal");
    common(s, true, false);
    s->add_flag("--unmerged", unmerged, "keep one state per tail");
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        QDiffSystem sys = build_system(spec);
        if (!unmerged) sys = merge_proportional(sys);
        Result r{header("system"), "system", [](const Json& j) { return to_json(system_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["system"] = to_json(sys);
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("eliminate", "q-difference equation of a target");
    common(s, true, true);
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        EliminationTrace trace;
        const QDiffEquation eq = eliminate_target(merge_proportional(build_system(spec)), cfg.target, &trace);
        Result r{header("eliminate"), "equation", [](const Json& j) { return to_json(equation_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["target"] = cfg.target;
        r.doc["equation"] = to_json(eq);
        r.doc["trace"] = {{"steps", trace.steps}, {"shape_checks", trace.shape_checks}, {"order", trace.order}};
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("recurrence", "coefficient recurrence of a target");
    common(s, true, true);
    s->add_option("--values", values, "also print g(0..values-1)")->check(CLI::NonNegativeNumber);
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        const QDiffEquation eq = eliminate_target(merge_proportional(build_system(spec)), cfg.target);
        const HoloSequence g{rec_from_qdiff(eq), {RationalQ(1)}};
        Result r{header("recurrence"), "recurrence", [](const Json& j) { return to_json(recurrence_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["target"] = cfg.target;
        r.doc["recurrence"] = to_json(g.rec);
        r.doc["values"] = values > 0 ? to_json(unroll(g, values - 1)) : Json::array();
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("expand", "x-coefficients of a multi-sum");
    s->add_option("sum", sum, "multi-sum name or file")->required();
    common(s, false, false);
    s->add_flag("--series", series, "also print q-expansions to the q-order");
    s->callback([&] {
      action = [&] {
        const AndrewsSum a = sum_arg(sum);
        const auto g = andrews_expand(a, cfg.D);
        Result r{header("expand"), "values", [](const Json& j) { return to_json(values_from_json(j)); }};
        r.doc["sum"] = to_json(a);
        r.doc["values"] = to_json(g);
        Json ser = Json::array();
        if (series)
          for (const auto& v : g) ser.push_back(to_json(expand_q(v, cfg.N)));
        r.doc["series"] = ser;
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("enumerate", "counts by length and weight");
    common(s, true, false);
    s->add_option("--target", cfg.target, "restricted subset name");
    s->callback([&] {
      action = [&] {
        IdealSpec spec = load_spec(cfg.ideal);
        if (!cfg.target.empty()) spec = spec.with_target(cfg.target);
        CountTable c;
        for (const auto& row : count_series(spec, cfg.D, cfg.N)) {
          std::vector<long long> v;
          for (int n = 0; n < row.order(); ++n) v.push_back(row[n].get_num().get_si());
          c.push_back(std::move(v));
        }
        Result r{header("enumerate"), "counts", [](const Json& j) { return counts_to_json(counts_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["target"] = cfg.target;
        r.doc["counts"] = counts_to_json(c);
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("guess", "search multi-sums matching a target's counts");
    common(s, true, true);
    s->add_option("--depth", depth, "x-degrees compared")->check(CLI::PositiveNumber);
    s->add_option("--jobs,-j", space.jobs, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--max-r", space.max_r, "largest number of summation variables")->check(CLI::Range(1, 3));
    s->add_option("--max-l3", space.max_l3, "largest x-grading per variable")->check(CLI::PositiveNumber);
    s->add_flag("--signs", space.signs, "allow sign vectors");
    s->add_option("--limit", limit, "candidates printed")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        GuessSpace sp = space;
        sp.depth = depth;
        sp.q_order = cfg.N;
        const auto found = guess(count_series(spec.with_target(cfg.target), depth, cfg.N), sp);
        Json cands = Json::array();
        for (std::size_t i = 0; i < found.size() && static_cast<int>(i) < limit; ++i) cands.push_back(to_json(found[i]));
        Result r{header("guess"), "candidates", [](const Json& j) {
                   Json a = Json::array();
                   for (const auto& s : j) a.push_back(to_json(sum_from_json(s)));
                   return a;
                 }};
        r.doc["ideal"] = spec.name;
        r.doc["target"] = cfg.target;
        r.doc["found"] = found.size();
        r.doc["candidates"] = cands;
        r.doc["box"] = {{"max_r", sp.max_r}, {"max_l3", sp.max_l3}, {"signs", sp.signs}, {"depth", sp.depth},
                        {"q_order", sp.q_order}, {"max_abs", sp.max_abs.get_str()}};
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("verify", "prove one of the twelve identities");
    s->add_option("identity", name, "identity name, e.g. type-i-1")->required();
    common(s, false, false);
    s->add_option("--sum", sum_file, "multi-sum file replacing the shipped one")->check(CLI::ExistingFile);
    s->callback([&] {
      action = [&] {
        VerifyOptions opt;
        opt.D = cfg.D;
        opt.N = cfg.N;
        opt.prefix = cfg.prefix;
        opt.sum_file = sum_file;
        const VerifyReport rep = verify_identity(name, opt);
        Result r{header("verify"), "report", [](const Json& j) { return to_json(report_from_json(j)); }};
        r.doc["report"] = to_json(rep);
        if (!rep.ok()) {
          r.refuted = true;
          if (!rep.error.empty()) {
            r.diagnostic = rep.error;
          } else {
            for (const auto& st : rep.stages)
              if (!st.ok) {
                r.diagnostic = "stage " + st.stage + " failed: " + st.detail;
                break;
              }
          }
        }
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("prove-equal", "certify a target's sequence against a multi-sum");
    common(s, true, true);
    s->add_option("--sum", proof_sum, "multi-sum name or file")->required();
    s->add_option("--sum-recurrence", stated, "recurrence file for the multi-sum side")->check(CLI::ExistingFile);
    s->callback([&] {
      action = [&] {
        const IdealSpec spec = load_spec(cfg.ideal);
        const HoloSequence g{rec_from_qdiff(eliminate_target(merge_proportional(build_system(spec)), cfg.target)),
                             {RationalQ(1)}};
        const int P = std::max(cfg.prefix, g.rec.order() + 1);
        const auto b = andrews_expand(sum_arg(proof_sum), P - 1);
        std::optional<Recurrence> brec;
        if (!stated.empty()) brec = recurrence_from_json(parse_json(read_text(stated)));
        Result r{header("prove-equal"), "certificate", [](const Json& j) { return to_json(certificate_from_json(j)); }};
        r.doc["ideal"] = spec.name;
        r.doc["target"] = cfg.target;
        const Certificate c = prove_equal(g, b, brec, P);
        r.doc["certificate"] = to_json(c);
        if (!c.complete()) {
          r.refuted = true;
          r.diagnostic = "certificate incomplete";
        }
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("phi21-check", "series checks of the 2phi1 and product identities");
    s->add_option("names", names, "checks to run (default all)");
    common(s, false, false);
    s->callback([&] {
      action = [&] {
        Result r{header("phi21-check"), "checks", nullptr};
        Json checks = Json::array();
        for (const auto& n : names.empty() ? series_check_names() : names) {
          const SeriesCheck c = check_series_identity(n, cfg.N);
          Json cmp = Json::array();
          for (const auto& x : c.comparisons)
            cmp.push_back({{"lhs", x.lhs}, {"rhs", x.rhs}, {"equal", x.equal}, {"first_difference", x.first_difference}});
          checks.push_back({{"name", c.name}, {"order", c.N}, {"ok", c.ok()}, {"comparisons", cmp}});
          if (!c.ok()) {
            r.refuted = true;
            r.diagnostic = "series check " + c.name + " failed";
          }
        }
        r.doc["checks"] = checks;
        return r;
      };
    });
  }
  {
    auto* s = app.add_subcommand("functional-check", "forward solution against the closed form");
    s->add_option("--a", a)->required();
    s->add_option("--b", b)->required();
    s->add_option("--c", c)->required();
    s->add_option("--d", d)->required();
    s->add_option("--alpha1", alpha1, "alpha_1 as a rational function of q");
    common(s, false, false);
    s->callback([&] {
      action = [&] {
        const FunctionalSolution f = solve_functional(a, b, c, d, RationalQ(1), parse_ratq(alpha1), cfg.D, cfg.N);
        Result r{header("functional-check"), "functional", nullptr};
        Json fs = Json::array(), cs = Json::array();
        for (const auto& x : f.forward_series) fs.push_back(to_json(x));
        for (const auto& x : f.closed_series) cs.push_back(to_json(x));
        r.doc["functional"] = {{"parameters", {a, b, c, d}},
                               {"alpha1", alpha1},
                               {"lift", f.lift},
                               {"agree", f.agree()},
                               {"forward", to_json(f.forward)},
                               {"closed", to_json(f.closed)},
                               {"forward_series", fs},
                               {"closed_series", cs}};
        if (!f.agree()) {
          r.refuted = true;
          r.diagnostic = "forward and closed solutions differ";
        }
        return r;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Result r = action();
    out << (cfg.output == "text" ? as_text(r.doc) : dump(r.doc));
    if (!cfg.golden.empty()) {
      std::string why;
      if (!golden_matches(r, cfg.golden, why)) {
        err << "golden mismatch: " << why << "\n";
        return 1;
      }
    }
    if (r.refuted) {
      err << "refuted: " << r.diagnostic << "\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace lpi
