#include "lpi/io.hpp"

#include "lpi/errors.hpp"
#include "lpi/text.hpp"

namespace lpi {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + " json: " + e.what());
  }
}

Rat rat_from(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  Rat r;
  if (!j.is_string() || r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational " + j.dump());
  r.canonicalize();
  return r;
}

} // namespace

Json to_json(const Partition& p) { return p.parts; }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

Json to_json(const Restriction& r) { return {{"min_part", r.min_part}, {"at_most_once", r.at_most_once}}; }

Restriction restriction_from_json(const Json& j) {
  return guarded("restriction", [&] {
    Restriction r;
    r.min_part = j.at("min_part").get<int>();
    r.at_most_once = j.at("at_most_once").get<int>();
    return r;
  });
}

Json to_json(const TailTable& t) {
  Json tails = Json::array();
  for (const auto& p : t.tails) tails.push_back(to_json(p));
  return {{"m", t.modulus}, {"tails", tails}, {"linking", t.linking}, {"spans", t.spans}};
}

TailTable tails_from_json(const Json& j) {
  return guarded("tail table", [&] {
    TailTable t;
    t.modulus = j.at("m").get<int>();
    for (const auto& p : j.at("tails")) t.tails.push_back(partition_from_json(p));
    t.linking = j.at("linking").get<std::vector<std::vector<int>>>();
    t.spans = j.at("spans").get<std::vector<int>>();
    return t;
  });
}

Json to_json(const QDiffSystem& s) {
  Json rows = Json::array();
  for (const auto& row : s.P) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  Json targets = Json::array();
  for (const auto& t : s.targets)
    targets.push_back({{"name", t.name},
                       {"restriction", to_json(t.restriction)},
                       {"state", t.state},
                       {"prefactor", to_string(t.prefactor)},
                       {"shift", t.shift}});
  return {{"m", s.m}, {"labels", s.labels}, {"rows", rows}, {"targets", targets}};
}

QDiffSystem system_from_json(const Json& j) {
  return guarded("system", [&] {
    QDiffSystem s;
    s.m = j.at("m").get<int>();
    s.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      std::vector<BiRat> r;
      for (const auto& e : row) r.push_back(parse_birat(e.get<std::string>()));
      s.P.push_back(std::move(r));
    }
    for (const auto& t : j.at("targets")) {
      SystemTarget x;
      x.name = t.at("name").get<std::string>();
      x.restriction = restriction_from_json(t.at("restriction"));
      x.state = t.at("state").get<int>();
      x.prefactor = parse_birat(t.at("prefactor").get<std::string>());
      x.shift = t.at("shift").get<int>();
      s.targets.push_back(std::move(x));
    }
    if (s.labels.size() != s.P.size()) throw ParseError("system json: labels and rows differ in length");
    return s;
  });
}

Json to_json(const QDiffEquation& e) {
  Json c = Json::array();
  for (const auto& p : e.coeffs) c.push_back(to_string(p));
  return {{"m", e.m}, {"order", e.order()}, {"coeffs", c}};
}

QDiffEquation equation_from_json(const Json& j) {
  return guarded("equation", [&] {
    QDiffEquation e;
    e.m = j.at("m").get<int>();
    for (const auto& c : j.at("coeffs")) e.coeffs.push_back(parse_bipoly(c.get<std::string>()));
    if (j.contains("order") && j.at("order").get<int>() != e.order())
      throw ParseError("equation json: order does not match the coefficient count");
    return e;
  });
}

Json to_json(const Recurrence& r) {
  Json c = Json::array();
  for (const auto& p : r.coeffs) c.push_back(to_string(p, "S"));
  return {{"order", r.order()}, {"coeffs", c}};
}

Recurrence recurrence_from_json(const Json& j) {
  return guarded("recurrence", [&] {
    Recurrence r;
    for (const auto& c : j.at("coeffs")) r.coeffs.push_back(parse_bipoly(c.get<std::string>()));
    return r;
  });
}

Json to_json(const NonvanishingReport& r) {
  return {{"bound", r.bound}, {"checked", r.checked}, {"first_zero", r.first_zero}, {"complete", r.complete()}};
}

NonvanishingReport nonvanishing_from_json(const Json& j) {
  return guarded("nonvanishing report", [&] {
    NonvanishingReport r;
    r.bound = j.at("bound").get<int>();
    r.checked = j.at("checked").get<std::vector<int>>();
    r.first_zero = j.at("first_zero").get<int>();
    return r;
  });
}

Json to_json(const Certificate& c) {
  return {{"recurrence", to_json(c.rec)},
          {"order", c.order},
          {"source", c.source},
          {"recurrence_checked", c.rec_ok},
          {"prefix", c.prefix},
          {"zero_initials", c.zero_initials},
          {"nonvanishing", to_json(c.nonvanishing)},
          {"complete", c.complete()}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    Certificate c;
    c.rec = recurrence_from_json(j.at("recurrence"));
    c.order = j.at("order").get<int>();
    c.source = j.at("source").get<std::string>();
    c.rec_ok = j.at("recurrence_checked").get<bool>();
    c.prefix = j.at("prefix").get<int>();
    c.zero_initials = j.at("zero_initials").get<std::vector<int>>();
    c.nonvanishing = nonvanishing_from_json(j.at("nonvanishing"));
    return c;
  });
}

Json to_json(const AndrewsSum& s) { return Json::parse(sum_to_json(s)); }

AndrewsSum sum_from_json(const Json& j) { return parse_sum(j.dump()); }

Json to_json(const VerifyReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}});
  Json j = {{"identity", r.name}, {"stages", stages}, {"ok", r.ok()}};
  j["equation"] = r.equation ? to_json(*r.equation) : Json();
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json();
  j["error"] = r.error;
  j["error_kind"] = r.error_kind;
  return j;
}

VerifyReport report_from_json(const Json& j) {
  return guarded("verify report", [&] {
    VerifyReport r;
    r.name = j.at("identity").get<std::string>();
    for (const auto& s : j.at("stages"))
      r.stages.push_back({s.at("stage").get<std::string>(), s.at("ok").get<bool>(), s.at("detail").get<std::string>()});
    if (!j.at("equation").is_null()) r.equation = equation_from_json(j.at("equation"));
    if (!j.at("certificate").is_null()) r.certificate = certificate_from_json(j.at("certificate"));
    r.error = j.at("error").get<std::string>();
    r.error_kind = j.at("error_kind").get<std::string>();
    return r;
  });
}

Json to_json(const std::vector<RationalQ>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<RationalQ> values_from_json(const Json& j) {
  return guarded("values", [&] {
    std::vector<RationalQ> out;
    for (const auto& v : j) out.push_back(parse_ratq(v.get<std::string>()));
    return out;
  });
}

Json to_json(const SeriesQ& s) {
  Json a = Json::array();
  for (int i = 0; i < s.order(); ++i) a.push_back(s[i].get_str());
  return a;
}

SeriesQ series_from_json(const Json& j) {
  return guarded("series", [&] {
    SeriesQ s(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) s[static_cast<int>(i)] = rat_from(j[i]);
    return s;
  });
}

Json counts_to_json(const CountTable& c) { return c; }

CountTable counts_from_json(const Json& j) {
  return guarded("counts", [&] { return j.get<CountTable>(); });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

} // namespace lpi
