#include "esm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "esm/error.hpp"
#include "esm/expr.hpp"
#include "esm/geomfix.hpp"

namespace esm {

using nlohmann::json;

namespace {

std::string str(long x) { return std::to_string(x); }
std::string str(const Integer& x) { return to_string(x); }
std::string str(const Rational& x) { return to_string(x); }

json params_json(const SelfMapParameters& q) {
  return {{"p", str(q.p)},   {"n", str(q.n)},     {"t", str(q.t)},  {"c_x", str(q.c_x)},
          {"k", str(q.k)},   {"c_v", str(q.c_v)}, {"ell", str(q.ell)}};
}

json report_json(const AdamsBottReport& r) {
  return {{"ell", str(r.ell)},
          {"theta", r.theta.to_string()},
          {"lambda", str(r.lambda)},
          {"identity_holds", r.identity_holds},
          {"valuation", str(r.valuation)},
          {"expected_valuation", str(r.expected_valuation)},
          {"d", str(r.d)},
          {"matches", r.matches}};
}

std::string params_text(const SelfMapParameters& q) {
  return "p=" + str(q.p) + " n=" + str(q.n) + " t=" + str(q.t) + " c_x=" + str(q.c_x) + " k=" + str(q.k) +
         " c_v=" + str(q.c_v) + " l=" + str(q.ell);
}

std::string pass_text(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

json certificate_json(const Certificate& c, const std::vector<std::string>& notes) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = c.group;
  j["x"] = c.x;
  j["v"] = c.v;
  j["verdict"] = to_string(c.verdict);
  j["hypothesis"] = {{"pass", c.hypothesis.pass}, {"clause", c.hypothesis.clause}};
  j["parameters"] = c.params ? params_json(*c.params) : json(nullptr);
  j["standard_form"] = c.standard ? json{{"multiplicity", str(c.standard->multiplicity)},
                                         {"label", c.standard->label},
                                         {"representation", c.standard->standard.to_string()}}
                                  : json(nullptr);
  if (c.step1) {
    const auto& s = *c.step1;
    j["step1"] = {{"pass", s.pass},
                  {"transfer_exponent", str(s.transfer_exponent)},
                  {"imj_s", str(s.imj_s)},
                  {"imj_degree", str(4 * s.imj_s - 1)},
                  {"imj_valuation", str(s.imj_valuation)},
                  {"order_exponent", str(s.order_exponent)}};
  } else {
    j["step1"] = nullptr;
  }
  if (c.step2) {
    const auto& s = *c.step2;
    j["step2"] = {{"pass", s.pass},
                  {"adams_bott", report_json(s.report)},
                  {"fixed_mod_x", s.fixed_mod_x},
                  {"conclusion", s.conclusion}};
  } else {
    j["step2"] = nullptr;
  }
  if (c.step3) {
    const auto& s = *c.step3;
    j["step3"] = {{"pass", s.pass},
                  {"sq1_cardinality", s.sq1_cardinality.to_string()},
                  {"contribution", s.contribution},
                  {"killed", s.killed},
                  {"sq1_x", s.sq1_x ? json(*s.sq1_x) : json(nullptr)}};
  } else {
    j["step3"] = nullptr;
  }
  j["warnings"] = c.warnings;
  j["notes"] = notes;
  return j;
}

std::string certificate_text(const Certificate& c, const std::vector<std::string>& notes) {
  std::ostringstream o;
  o << "group       " << c.group << "\n";
  o << "X           " << c.x << "\n";
  o << "V           " << c.v << "\n";
  if (c.params) o << "parameters  " << params_text(*c.params) << "\n";
  if (c.standard) o << "standard    " << c.standard->label << " = " << c.standard->standard.to_string() << "\n";
  o << "hypothesis  " << pass_text(c.hypothesis.pass) << ": " << c.hypothesis.clause << "\n";
  if (c.step1 && c.params) {
    const auto& s = *c.step1;
    const std::string p = str(c.params->p);
    o << "step 1      " << pass_text(s.pass) << ": alpha = tr(" << p << "^" << s.transfer_exponent << " j), j of order "
      << p << "^" << s.imj_valuation << " in degree " << 4 * s.imj_s - 1 << ", res(alpha) of order " << p << "^"
      << s.order_exponent << "\n";
  }
  if (c.step2) {
    const auto& s = *c.step2;
    o << "step 2      " << pass_text(s.pass) << ": theta^" << s.report.ell << "(V) - 1 = " << str(s.report.lambda)
      << "*reg; " << s.conclusion << "\n";
  }
  if (c.step3) {
    const auto& s = *c.step3;
    o << "step 3      " << pass_text(s.pass) << ": Sq1(|X|) = " << s.sq1_cardinality.to_string() << ", contribution "
      << s.contribution << (s.killed ? " vanishes" : " survives") << "\n";
    if (s.sq1_x) o << "Sq1(X)      " << *s.sq1_x << "\n";
  }
  o << "verdict     " << to_string(c.verdict) << "\n";
  for (const auto& w : c.warnings) o << "warning: " << w << "\n";
  for (const auto& n : notes) o << "note: " << n << "\n";
  return o.str();
}

namespace {

struct Output {
  bool json = false;
  void add(CLI::App* sub, bool json_default) {
    json = json_default;
    auto* j = sub->add_flag_callback("--json", [this] { json = true; }, "JSON output");
    auto* t = sub->add_flag_callback("--text", [this] { json = false; }, "text output");
    j->excludes(t);
  }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

GroupDescriptor group_of(const std::string& label) { return GroupDescriptor::parse(label); }

std::pair<long, long> cyclic_p_group(const GroupDescriptor& d) {
  const auto pp = d.prime_power();
  if (d.kind != GroupDescriptor::Kind::Cyclic || !pp) fail_input(d.label() + " is not a cyclic p-group");
  return *pp;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream o;
  for (const auto& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      if (i + 1 < r.size()) cell += std::string(width[i] - r[i].size() + 2, ' ');
      line += cell;
    }
    o << line << "\n";
  }
  return o.str();
}

int do_certify(const std::string& group, const std::string& gset, const std::string& rep, std::optional<long> ell,
               bool as_json, std::ostream& out) {
  const auto d = group_of(group);
  const auto ring = representation_ring(d);
  const auto x = parse_gset(gset, ring->lattice());
  const auto v = parse_rep_with_notes(rep, ring);
  const auto c = certify_self_map(x, v.value, ell);
  if (as_json)
    emit(out, certificate_json(c, v.notes));
  else
    out << certificate_text(c, v.notes);
  return c.verdict == Certificate::Verdict::Certified ? 0 : 1;
}

int do_enumerate(const std::string& group, const std::string& mode_name, EnumerationBounds bounds, long t_max,
                 bool as_json, std::ostream& out) {
  const auto d = group_of(group);
  const auto pp = d.prime_power();
  if (!pp) fail_input(d.label() + " is not a p-group");
  const auto [p, n] = *pp;
  if (d.kind == GroupDescriptor::Kind::Dicyclic) {
    const auto rows = enumerate_quaternion(n, t_max);
    if (as_json) {
      json j = {{"schema_version", kSchemaVersion}, {"group", d.label()}, {"rows", json::array()}};
      for (const auto& r : rows)
        j["rows"].push_back({{"t", str(r.t)},
                             {"multiplicity", str(r.multiplicity)},
                             {"k", str(r.k)},
                             {"thm1", r.thm1.pass},
                             {"clause", r.thm1.clause},
                             {"minimal_exponent", str(r.minimal_exponent)}});
      emit(out, j);
    } else {
      std::vector<std::vector<std::string>> cells{{"t", "V", "k", "thm1", "least 2^e"}};
      for (const auto& r : rows)
        cells.push_back({str(r.t), str(r.multiplicity) + "*H", str(r.k), r.thm1.pass ? "yes" : "no",
                         "2^" + str(r.minimal_exponent) + "*H"});
      out << "X of cardinality 2^t c over " << d.label() << "\n" << table(cells);
    }
    return 0;
  }
  EnumerationMode mode;
  if (mode_name == "thm1")
    mode = EnumerationMode::Thm1;
  else if (mode_name == "thm511")
    mode = EnumerationMode::Thm511;
  else
    fail_input("--mode must be thm1 or thm511");
  const auto rows = enumerate_5_1(p, n, mode, bounds);
  const long flagged = std::count_if(rows.begin(), rows.end(), [](const EnumerationRow& r) { return !r.consistent; });
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"group", d.label()}, {"mode", mode_name},
              {"inconsistent", str(flagged)}, {"rows", json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"s", str(r.s)}, {"i", str(r.i)}, {"d", str(r.d)}, {"k", str(r.k)}, {"t", str(r.t)},
                           {"thm1", r.thm1}, {"thm511", r.thm511}, {"consistent", r.consistent},
                           {"verdict", r.verdict}, {"clause", r.clause}});
    emit(out, j);
    return 0;
  }
  std::vector<std::vector<std::string>> cells{{"X", "V", "k", "t", "thm1", "thm511", "verdict", ""}};
  const std::string g = d.label();
  for (const auto& r : rows) {
    const std::string ps = r.s == 0 ? "" : (r.s == 1 ? str(p) : str(p) + "^" + str(r.s));
    const std::string pd = r.d == 0 ? "" : (r.d == 1 ? str(p) : str(p) + "^" + str(r.d)) + "*";
    const auto& sub = lattice_for(d)->at(static_cast<size_t>(r.i)).label;
    cells.push_back({ps + "[" + g + "/" + sub + "]", pd + "W" + str(d.order()), str(r.k), str(r.t),
                     r.thm1 ? "yes" : "no", r.thm511 ? "yes" : "no", r.verdict ? "yes" : "no",
                     r.consistent ? "" : "inconsistent"});
  }
  out << "mode " << mode_name << "\n" << table(cells) << flagged << " rows where the two criteria disagree\n";
  return 0;
}

int do_sq1(const std::string& group, const std::string& gset, std::optional<std::string> integer, bool as_json,
           std::ostream& out) {
  json j = {{"schema_version", kSchemaVersion}};
  std::string text;
  if (integer) {
    if (!group.empty() || !gset.empty()) fail_input("--int excludes --group and --gset");
    Integer n;
    if (n.set_str(*integer, 10) != 0) fail_input("--int needs an integer");
    const auto s = sq1_int(n);
    j["input"] = str(n);
    j["sq1"] = s.to_string();
    text = "Sq1(" + str(n) + ") = " + s.to_string() + "\n";
  } else {
    if (group.empty() || gset.empty()) fail_input("sq1 needs --int or both --group and --gset");
    const auto lat = lattice_for(group_of(group));
    const auto x = parse_gset(gset, lat);
    const auto s = sq1_gset(x);
    const auto u = underlying(s);
    j["group"] = lat->group().label();
    j["input"] = x.to_string();
    j["sq1"] = s.to_string();
    j["underlying"] = u.to_string();
    text = "Sq1(" + x.to_string() + ") = " + s.to_string() + "\nunderlying: " + u.to_string() + "\n";
  }
  if (as_json)
    emit(out, j);
  else
    out << text;
  return 0;
}

int do_imj(std::optional<long> degree, std::optional<long> s_opt, bool as_json, std::ostream& out) {
  if (degree.has_value() == s_opt.has_value()) fail_input("imj needs exactly one of --degree and --s");
  long s = 0;
  if (degree) {
    if (*degree < 3 || (*degree + 1) % 4 != 0) fail_input("degree must be 4s - 1 with s >= 1");
    s = (*degree + 1) / 4;
  } else {
    s = *s_opt;
    if (s < 1) fail_input("s must be positive");
  }
  if (s > 1000000) fail_input("s is too large");
  Integer order = 1;
  std::vector<std::pair<long, long>> parts;
  for (long p = 2; p <= 2 * s + 1; ++p) {
    if (!is_prime(p)) continue;
    const long v = imj_valuation(s, p).valuation;
    if (v == 0) continue;
    parts.emplace_back(p, v);
    order *= ipow(Integer(p), static_cast<unsigned long>(v));
  }
  std::optional<Integer> oracle;
  if (2 * s <= 100) oracle = imj_order_oracle(s, 50);
  if (oracle && *oracle != order) fail_internal("closed form order disagrees with the Bernoulli denominator");
  std::string factored;
  for (const auto& [p, v] : parts) factored += (factored.empty() ? "" : " * ") + str(p) + (v > 1 ? "^" + str(v) : "");
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"degree", str(4 * s - 1)}, {"s", str(s)}, {"order", str(order)}};
    j["oracle"] = oracle ? json(str(*oracle)) : json(nullptr);
    j["parts"] = json::object();
    for (const auto& [p, v] : parts)
      j["parts"][str(p)] = {{"valuation", str(v)}, {"part", str(ipow(Integer(p), static_cast<unsigned long>(v)))}};
    emit(out, j);
    return 0;
  }
  out << "degree " << 4 * s - 1 << " (s = " << s << ")\n";
  out << "order " << str(order) << " = " << factored << "\n";
  for (const auto& [p, v] : parts)
    out << p << "-part " << str(ipow(Integer(p), static_cast<unsigned long>(v))) << "\n";
  if (oracle) out << "Bernoulli denominator of B_" << 2 * s << "/" << 4 * s << ": " << str(*oracle) << "\n";
  return 0;
}

int do_theta(const std::string& group, const std::string& rep, std::optional<long> ell, bool as_json,
             std::ostream& out) {
  const auto d = group_of(group);
  const auto ring = representation_ring(d);
  const auto v = parse_rep_with_notes(rep, ring);
  const auto pp = d.prime_power();
  if (!ell) {
    if (!pp) fail_input("--ell is required over " + d.label());
    ell = default_ell(pp->first);
  }
  if (*ell < 1) fail_input("--ell must be positive");
  const auto th = theta(*ell, v.value);
  std::optional<AdamsBottReport> report;
  if (pp && *ell % pp->first != 0 && is_fixed_point_free(v.value) && has_rational_characters(v.value)) {
    try {
      report = verify_adams_bott(v.value, *ell);
    } catch (const InputError&) {
      // dimension of the wrong shape: theta alone
    }
  }
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"group", d.label()}, {"v", v.value.to_string()},
              {"ell", str(*ell)}, {"theta", th.to_string()}, {"notes", v.notes}};
    j["adams_bott"] = report ? report_json(*report) : json(nullptr);
    emit(out, j);
  } else {
    out << "theta^" << *ell << "(" << v.value.to_string() << ") = " << th.to_string() << "\n";
    if (report) {
      out << "theta - 1 = " << str(report->lambda) << "*reg: " << (report->identity_holds ? "yes" : "no") << "\n";
      out << "v_" << pp->first << "(lambda) = " << report->valuation << ", k+1-n = " << report->expected_valuation
          << ", d = " << str(report->d) << "\n";
    }
    for (const auto& n : v.notes) out << "note: " << n << "\n";
  }
  return report && !report->matches ? 1 : 0;
}

int do_marks(const std::string& group, const std::string& gset, bool as_json, std::ostream& out) {
  const auto lat = lattice_for(group_of(group));
  std::vector<std::string> labels;
  for (const auto& c : lat->classes()) labels.push_back(c.label);
  if (!gset.empty()) {
    const auto x = parse_gset(gset, lat);
    const auto m = marks(x);
    if (as_json) {
      json j = {{"schema_version", kSchemaVersion}, {"group", lat->group().label()}, {"x", x.to_string()},
                {"classes", labels}, {"marks", json::array()}};
      for (const auto& v : m) j["marks"].push_back(str(v));
      emit(out, j);
    } else {
      std::vector<std::vector<std::string>> cells{labels, {}};
      for (const auto& v : m) cells[1].push_back(str(v));
      out << "marks of " << x.to_string() << "\n" << table(cells);
    }
    return 0;
  }
  const auto& tm = lat->table_of_marks();
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"group", lat->group().label()}, {"classes", labels},
              {"marks", json::array()}};
    for (const auto& row : tm) {
      json r = json::array();
      for (long v : row) r.push_back(str(v));
      j["marks"].push_back(r);
    }
    emit(out, j);
    return 0;
  }
  std::vector<std::vector<std::string>> cells{{""}};
  for (const auto& l : labels) cells[0].push_back(l);
  for (size_t h = 0; h < tm.size(); ++h) {
    std::vector<std::string> r{"[" + lat->group().label() + "/" + labels[h] + "]"};
    for (long v : tm[h]) r.push_back(str(v));
    cells.push_back(r);
  }
  out << table(cells);
  return 0;
}

int do_telescope(const std::string& group, long s, long i, bool as_json, std::ostream& out) {
  const auto d = group_of(group);
  const auto [p, n] = cyclic_p_group(d);
  const auto rows = telescope_table(p, n, s, i);
  if (as_json) {
    json j = {{"schema_version", kSchemaVersion}, {"group", d.label()}, {"s", str(s)}, {"i", str(i)},
              {"rows", json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"j", str(r.j)}, {"mark", str(r.mark)}, {"cofiber", r.cofiber},
                           {"telescope", r.telescope.to_string()}, {"ku", r.ku.to_string()}});
    emit(out, j);
    return 0;
  }
  const auto lat = lattice_for(d);
  std::vector<std::vector<std::string>> cells{{"H", "|X^H|", "Phi^H C(X)", "Phi^H C(X)[v^-1]", "Phi^H KU tensor C(X)"}};
  for (const auto& r : rows)
    cells.push_back({lat->at(static_cast<size_t>(r.j)).label, str(r.mark), r.cofiber, r.telescope.to_string(),
                     r.ku.to_string()});
  out << table(cells);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for equivariant v1 self maps over cyclic p-groups and quaternion groups", "esm"};
  app.require_subcommand(1);

  std::string group, gset, rep, mode = "thm1";
  std::optional<long> ell, degree, s_opt;
  std::optional<std::string> integer;
  EnumerationBounds bounds;
  long t_max = 5, s = 0, i = 0;

  auto* certify = app.add_subcommand("certify", "certify a self map of C(X) of degree V");
  certify->add_option("--group", group, "C8, Q16, ...")->required();
  certify->add_option("--gset", gset, "virtual G-set X")->required();
  certify->add_option("--rep", rep, "representation V")->required();
  certify->add_option("--ell", ell, "Adams index");
  Output certify_out;
  certify_out.add(certify, true);

  auto* enumerate = app.add_subcommand("enumerate", "tables of self maps over C_{p^n} or Q_{2^n}");
  enumerate->add_option("--group", group)->required();
  enumerate->add_option("--mode", mode, "thm1 or thm511");
  enumerate->add_option("--s-max", bounds.s_max);
  enumerate->add_option("--d-max", bounds.d_max);
  enumerate->add_option("--t-max", t_max);
  Output enumerate_out;
  enumerate_out.add(enumerate, false);

  auto* sq1 = app.add_subcommand("sq1", "the power operation Sq1");
  sq1->add_option("--group", group);
  sq1->add_option("--gset", gset);
  sq1->add_option("--int", integer);
  Output sq1_out;
  sq1_out.add(sq1, false);

  auto* imj = app.add_subcommand("imj", "order of the image of J");
  imj->add_option("--degree", degree, "4s - 1");
  imj->add_option("--s", s_opt);
  Output imj_out;
  imj_out.add(imj, false);

  auto* th = app.add_subcommand("theta", "Bott cannibalistic class theta^l(V)");
  th->add_option("--group", group)->required();
  th->add_option("--rep", rep)->required();
  th->add_option("--ell", ell);
  Output theta_out;
  theta_out.add(th, false);

  auto* mk = app.add_subcommand("marks", "table of marks, or the marks of a G-set");
  mk->add_option("--group", group)->required();
  mk->add_option("--gset", gset);
  Output marks_out;
  marks_out.add(mk, false);

  auto* tel = app.add_subcommand("telescope", "geometric fixed points of telescopes over C_{p^n}");
  tel->add_option("--group", group)->required();
  tel->add_option("--s", s);
  tel->add_option("--i", i);
  Output tel_out;
  tel_out.add(tel, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*certify) return do_certify(group, gset, rep, ell, certify_out.json, out);
    if (*enumerate) return do_enumerate(group, mode, bounds, t_max, enumerate_out.json, out);
    if (*sq1) return do_sq1(group, gset, integer, sq1_out.json, out);
    if (*imj) return do_imj(degree, s_opt, imj_out.json, out);
    if (*th) return do_theta(group, rep, ell, theta_out.json, out);
    if (*mk) return do_marks(group, gset, marks_out.json, out);
    if (*tel) return do_telescope(group, s, i, tel_out.json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace esm
