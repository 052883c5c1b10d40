#include "fuchs/cli.hpp"

#include "fuchs/acceptance.hpp"
#include "fuchs/cache.hpp"
#include "fuchs/chartab.hpp"
#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/fuchsian.hpp"
#include "fuchs/homcount.hpp"
#include "fuchs/levi.hpp"
#include "fuchs/lie_data.hpp"
#include "fuchs/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>

namespace fuchs {

namespace {

using nlohmann::ordered_json;

std::string csv_cell(const ordered_json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << "\n";
}

// Reports with a "rows" array print one line per row; others print a single key/value row.
void write_csv(const ordered_json& report, std::ostream& out) {
  if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty() && report["rows"][0].is_object()) {
    std::vector<std::string> header;
    for (const auto& [k, _] : report["rows"][0].items()) header.push_back(k);
    write_csv_row(out, header);
    for (const auto& row : report["rows"]) {
      std::vector<std::string> cells;
      for (const auto& k : header) cells.push_back(row.contains(k) ? csv_cell(row[k]) : "");
      write_csv_row(out, cells);
    }
    return;
  }
  std::vector<std::string> header, cells;
  for (const auto& [k, v] : report.items()) {
    header.push_back(k);
    cells.push_back(csv_cell(v));
  }
  write_csv_row(out, header);
  write_csv_row(out, cells);
}

bool is_hypothesis_kind(ErrorKind k) {
  return k == ErrorKind::HypothesisFailed || k == ErrorKind::Inadmissible || k == ErrorKind::OutOfRange ||
         k == ErrorKind::DeterminantUnfixable;
}

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s(buf);
  return s == "-0.000000000" ? "0.000000000" : s;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string tok = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      fail(ErrorKind::ParseError, "bad index '" + tok + "' in list '" + text + "'");
    }
    out.push_back(std::stoull(tok));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::map<std::uint64_t, std::int64_t> parse_jtable(const std::string& text) {
  std::map<std::uint64_t, std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string tok = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    const auto colon = tok.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "j-table entries look like m:j, got '" + tok + "'");
    try {
      out[std::stoull(tok.substr(0, colon))] = std::stoll(tok.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad j-table entry '" + tok + "'");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Ambient parse_ambient(const std::string& s) {
  if (s == "GL") return Ambient::GL;
  if (s == "SL") return Ambient::SL;
  if (s == "Sp") return Ambient::Sp;
  if (s == "SO") return Ambient::SO;
  fail(ErrorKind::ParseError, "family must be GL, SL, Sp or SO, got '" + s + "'");
}

FieldPtr field_for_order(std::uint64_t q) {
  const auto [p, a] = prime_power(q);
  if (p == 0) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return field_make(static_cast<std::uint32_t>(p), a);
}

ordered_json rational_or_null(const std::optional<Rational>& r) { return r ? ordered_json(to_string(*r)) : ordered_json(nullptr); }

struct Context {
  std::string format = "json";
  std::string cache_dir;
  unsigned threads = 1;
  bool timing = false;
  int status = 0;
  ordered_json report;

  std::optional<std::filesystem::path> cache() const { return resolve_cache_dir(cache_dir.empty() ? std::nullopt : std::optional(cache_dir)); }
};

void cmd_measure(Context& cx, const std::string& sig_text) {
  const auto sig = parse_signature(sig_text);
  cx.report["signature"] = to_string(sig);
  cx.report["mu"] = to_string(measure(sig));
  cx.report["valid"] = validate(sig).valid;
}

void cmd_validate(Context& cx, const std::string& sig_text) {
  const auto sig = parse_signature(sig_text);
  const auto v = validate(sig);
  cx.report["signature"] = to_string(sig);
  cx.report["mu"] = to_string(measure(sig));
  cx.report["valid"] = v.valid;
  cx.report["reasons"] = v.reasons;
}

void cmd_thresholds(Context& cx, const std::string& sig_text) {
  const auto sig = parse_signature(sig_text);
  const auto th = thresholds(sig);
  auto& r = cx.report;
  r["signature"] = to_string(sig);
  r["mu"] = to_string(th.mu);
  r["t"] = to_string(th.t);
  r["nu"] = to_string(th.nu);
  r["sigma1"] = to_string(th.sigma1);
  r["sigma2"] = to_string(th.sigma2);
  r["sigma3"] = to_string(th.sigma3);
  r["N1"] = to_string(th.N1);
  const std::pair<const char*, const std::optional<Rational>*> opt[] = {{"N2", &th.N2}, {"N3", &th.N3}, {"N4", &th.N4}, {"N5", &th.N5}};
  for (const auto& [name, val] : opt) {
    if (*val) r[name] = to_string(**val);
  }
  r["missing"] = ordered_json::object();
  for (const auto& [k, v] : th.missing) r["missing"][k] = v;
  if (!th.missing.empty()) cx.status = 2;
}

void cmd_qadmissible(Context& cx, const std::string& sig_text, const std::string& m_text, const std::string& variant, std::size_t count,
                     const std::string& type) {
  std::vector<std::uint64_t> periods;
  if (!sig_text.empty()) periods = parse_signature(sig_text).periods;
  if (!m_text.empty()) {
    for (auto v : parse_index_list(m_text)) periods.push_back(v);
  }
  if (variant != "mod-m" && variant != "mod-2m") fail(ErrorKind::ParseError, "variant must be mod-m or mod-2m");
  const auto qs = q_admissible(periods, variant == "mod-m" ? Congruence::ModM : Congruence::Mod2M, count,
                               type.empty() ? std::nullopt : std::optional<std::string_view>(type));
  cx.report["periods"] = periods;
  cx.report["variant"] = variant;
  if (!type.empty()) cx.report["type"] = type;
  cx.report["q"] = qs;
}

void cmd_chartab(Context& cx, const std::string& group_text, bool with_mult) {
  const auto spec = parse_group_spec(group_text);
  const auto bundle = load_or_compute_table(spec, cx.cache());
  const auto& t = bundle.table;
  auto& r = cx.report;
  r["group"] = t.group_spec;
  r["order"] = std::to_string(t.group_order);
  r["exponent"] = t.exponent;
  r["dixon_prime"] = t.dixon_prime;
  r["num_classes"] = t.num_classes();
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes) classes.push_back({{"size", std::to_string(c.size)}, {"order", c.order}, {"rep", c.representative}});
  r["classes"] = std::move(classes);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < t.num_characters(); ++i) {
    ordered_json values = ordered_json::array();
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      const auto v = numeric_value(t, i, c);
      values.push_back(fixed9(v.real()) + (v.imag() < 0 ? "-" : "+") + fixed9(std::abs(v.imag())).substr(0) + "i");
    }
    ordered_json row{{"character", i}, {"degree", std::to_string(t.degrees[i])}, {"indicator", t.indicators[i]}, {"values", values}};
    if (with_mult) row["multiplicities"] = t.multiplicities[i];
    rows.push_back(std::move(row));
  }
  r["rows"] = std::move(rows);
}

void cmd_zeta(Context& cx, const std::string& group_text, const std::string& s_text, bool nontrivial) {
  const auto spec = parse_group_spec(group_text);
  const auto bundle = load_or_compute_table(spec, cx.cache());
  const Rational s = parse_rational(s_text);
  cx.report["group"] = bundle.table.group_spec;
  cx.report["s"] = to_string(s);
  cx.report["nontrivial_only"] = nontrivial;
  const auto exact = nontrivial ? zeta0_exact(bundle.table, s) : zeta_exact(bundle.table, s);
  cx.report["exact"] = rational_or_null(exact);
  cx.report["value"] = nontrivial ? zeta0(bundle.table, s) : zeta(bundle.table, s);
}

void cmd_homcount(Context& cx, const std::string& sig_text, const std::string& group_text, const std::string& classes_text,
                  bool exact_orders, const std::string& oracle) {
  const auto start = std::chrono::steady_clock::now();
  const auto sig = parse_signature(sig_text);
  const auto spec = parse_group_spec(group_text);
  CountMethod method = CountMethod::Formula;
  if (oracle == "oracle") method = CountMethod::Oracle;
  else if (oracle == "both") method = CountMethod::Both;
  else if (oracle != "formula") fail(ErrorKind::ParseError, "--oracle must be formula, oracle or both");
  const auto bundle = load_or_compute_table(spec, cx.cache());
  std::optional<ClassTuple> tup;
  if (!classes_text.empty()) tup = parse_index_list(classes_text);
  HomCountReport rep;
  rep.signature = sig;
  rep.group = bundle.table.group_spec;
  rep.mode = tup ? CountMode::Classes : CountMode::Total;
  rep.method = method;
  std::optional<BigInt> formula, oracle_value;
  if (method != CountMethod::Oracle) {
    FormulaOptions fo;
    fo.exact_orders = exact_orders;
    formula = tup ? hom_count_classes(sig, bundle.table, *tup, fo) : hom_count_total(sig, bundle.table, fo);
  }
  if (method != CountMethod::Formula) {
    OracleOptions oo;
    oo.classes = tup;
    oo.exact_orders = exact_orders;
    oo.threads = cx.threads;
    oracle_value = oracle_hom_count(sig, bundle.group, bundle.classes, oo);
  }
  rep.count = formula ? *formula : *oracle_value;
  if (method == CountMethod::Both) {
    rep.crosscheck = *formula == *oracle_value;
    rep.oracle_count = oracle_value;
  }
  auto& r = cx.report;
  r["signature"] = to_string(rep.signature);
  r["group"] = rep.group;
  r["mode"] = mode_name(rep.mode);
  if (tup) r["classes"] = *tup;
  r["exact_orders"] = exact_orders;
  r["count"] = to_string(rep.count);
  r["method"] = method_name(rep.method);
  if (rep.crosscheck) {
    r["crosscheck"] = *rep.crosscheck ? "agree" : "disagree";
    r["oracle_count"] = to_string(*rep.oracle_count);
    if (!*rep.crosscheck) cx.status = 1;
  }
  if (cx.timing) {
    r["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
}

void cmd_epi(Context& cx, const std::string& sig_text, const std::string& group_text) {
  const auto sig = parse_signature(sig_text);
  const auto spec = parse_group_spec(group_text);
  const auto group = standard_group(spec);
  const auto classes = conjugacy_classes(group);
  OracleOptions oo;
  oo.threads = cx.threads;
  const auto res = epi_count(sig, group, classes, oo);
  cx.report["signature"] = to_string(sig);
  cx.report["group"] = spec.to_string();
  cx.report["epi"] = to_string(res.epi);
  cx.report["hom"] = to_string(res.hom);
  cx.report["probability"] = to_string(res.probability);
}

ordered_json alpha_json(const LeviShape& shape) {
  const auto a = alpha(shape);
  ordered_json j;
  j["levi"] = to_string(shape);
  j["alpha"] = to_string(a.value);
  j["witness"] = a.witness_string();
  j["ambient_type"] = a.ambient ? a.ambient->to_string() : "-";
  j["levi_orbit_dim"] = a.levi_orbit_dim;
  j["ambient_orbit_dim"] = a.ambient_orbit_dim;
  return j;
}

void cmd_alpha(Context& cx, const std::string& levi_text, const std::string& type, const std::string& label) {
  if (!levi_text.empty()) {
    cx.report.update(alpha_json(parse_levi(levi_text)));
    return;
  }
  if (type.empty() || label.empty()) fail(ErrorKind::ParseError, "alpha needs --levi, or --type with --label");
  const auto row = alpha_exceptional(type, label);
  cx.report["type"] = type;
  cx.report["label"] = row.label;
  cx.report["alpha"] = to_string(row.value);
  cx.report["kind"] = row.kind;
}

void cmd_alphabound(Context& cx, const std::string& levi_text) {
  const auto shape = parse_levi(levi_text);
  const auto a = alpha(shape);
  const auto bound = alpha_bound_classical(shape);
  auto& r = cx.report;
  r["levi"] = to_string(shape);
  r["dim_levi"] = levi_dimension(shape);
  r["dim_ambient"] = ambient_dimension(shape.ambient, shape.dim);
  r["alpha"] = to_string(a.value);
  r["bound"] = to_string(bound);
  r["holds"] = a.value <= bound;
  if (shape.ambient == Ambient::GL || shape.ambient == Ambient::SL) r["semisimple_bound"] = to_string(alpha_semisimple_bound_gl(shape));
}

void cmd_construct(Context& cx, const std::string& family_text, int n, std::uint64_t m, std::uint64_t q) {
  const Ambient family = parse_ambient(family_text);
  const FieldPtr f = field_for_order(q);
  const auto e = construct_element(family, n, m, f);
  auto& r = cx.report;
  r["family"] = family_text;
  r["n"] = n;
  r["m"] = m;
  r["q"] = q;
  r["matrix"] = e.matrix.format();
  r["order"] = matrix_order(e.matrix, m);
  r["exponents"] = e.exponents;
  r["split_case"] = e.split_case;
  r["centralizer"] = e.centralizer_description;
  r["centralizer_shape"] = to_string(e.centralizer);
  r["centralizer_order"] = to_string(e.centralizer_order);
  if (e.centralizer_order_in_sl) r["sl_centralizer_order"] = to_string(*e.centralizer_order_in_sl);
  r["bound_exponent"] = to_string(e.bound_exponent);

  ordered_json verify;
  std::optional<ClassSizeReport> check;
  const bool linear = family == Ambient::GL || family == Ambient::SL;
  if (linear && order_gl_q(static_cast<std::uint64_t>(n), q) <= 2'000'000) {
    const auto gl = standard_group(GroupSpec{GroupFamily::GL, static_cast<std::uint32_t>(n), q});
    const auto scanned = centralizer_order(gl, GroupElement::matrix(e.matrix));
    verify["source"] = "group-scan";
    verify["gl_centralizer_order"] = std::to_string(scanned);
    verify["matches_prediction"] = BigInt(scanned) == e.centralizer_order;
    if (family == Ambient::GL) {
      check = class_size_check(e, gl);
    } else {
      check = class_size_check(e, standard_group(GroupSpec{GroupFamily::SL, static_cast<std::uint32_t>(n), q}));
    }
  } else if (linear) {
    const auto counted = commutant_centralizer_order(e.matrix, false);
    verify["source"] = counted ? "commutant-scan" : "none";
    if (counted) {
      verify["gl_centralizer_order"] = to_string(*counted);
      verify["matches_prediction"] = *counted == e.centralizer_order;
    }
  } else {
    verify["source"] = "none";
    verify["form_preserved"] = true;
  }
  r["verification"] = std::move(verify);
  if (!check) check = class_size_check(e);
  ordered_json cs;
  cs["applicable"] = check->applicable;
  cs["source"] = check->source;
  cs["group_order"] = to_string(check->group_order);
  cs["class_size"] = to_string(check->class_size);
  cs["bound_exponent"] = to_string(check->bound_exponent);
  if (check->applicable) {
    cs["exceeds_exponent_bound"] = check->exceeds_exponent_bound;
    cs["exceeds_instance_bound"] = check->exceeds_instance_bound;
  }
  r["class_size_check"] = std::move(cs);
}

void cmd_jm(Context& cx, const std::string& family_text, int n, std::uint64_t m) {
  const Ambient a = parse_ambient(family_text);
  const JmFamily fam = a == Ambient::GL ? JmFamily::GL : a == Ambient::SL ? JmFamily::SL : a == Ambient::Sp ? JmFamily::Sp : JmFamily::SO;
  const auto res = dim_Jm(fam, n, m);
  cx.report["family"] = family_text;
  cx.report["n"] = n;
  cx.report["m"] = m;
  cx.report["jm"] = res.jm;
  cx.report["shape"] = to_string(res.shape);
  cx.report["levi_dim"] = res.levi_dim;
}

void cmd_dimhom(Context& cx, const std::string& sig_text, const std::string& type, const std::string& jtable,
                const std::string& family, std::uint64_t n) {
  const auto sig = parse_signature(sig_text);
  cx.report["signature"] = to_string(sig);
  if (!type.empty()) {
    const auto source = jtable.empty() ? JSource::StoredLower : JSource::UserTable;
    const auto rep = dim_hom_exceptional(sig, type, source, jtable.empty() ? std::map<std::uint64_t, std::int64_t>{} : parse_jtable(jtable));
    cx.report["type"] = rep.type;
    cx.report["j_source"] = source == JSource::StoredLower ? "stored-lower" : "user-table";
    cx.report["group_dimension"] = rep.group_dimension;
    cx.report["jm"] = rep.jm;
    cx.report["low"] = rep.low;
    cx.report["high"] = rep.high;
    cx.report["mode"] = rep.mode;
    return;
  }
  if (family.empty()) fail(ErrorKind::ParseError, "dimhom needs --type, or --family with --n");
  const DimInterval iv = family == "GL" ? dim_interval_gl(sig, n) : dim_interval_classical(sig, parse_series(family), n);
  cx.report["family"] = family;
  cx.report["n"] = n;
  cx.report["lower"] = to_string(iv.lower);
  cx.report["upper"] = rational_or_null(iv.upper);
  cx.report["c_min"] = rational_or_null(iv.c_min);
  cx.report["c_max"] = rational_or_null(iv.c_max);
  cx.report["note"] = iv.note;
}

void cmd_bounds(Context& cx, const std::string& sig_text, const std::string& family, std::uint64_t n) {
  const auto sig = parse_signature(sig_text);
  const auto b = bound_exponents(sig, parse_bound_family(family), n);
  cx.report["signature"] = to_string(sig);
  cx.report["family"] = family;
  cx.report["n"] = n;
  cx.report["lower_exponent"] = to_string(b.lower_exponent);
  cx.report["upper_exponent"] = to_string(b.upper_exponent);
  ordered_json hyp = ordered_json::object();
  bool all = true;
  for (const auto& [name, ok] : b.hypotheses) {
    hyp[name] = ok;
    all = all && ok;
  }
  cx.report["hypotheses"] = std::move(hyp);
  if (!all) cx.status = 2;
}

void cmd_acceptance(Context& cx, int criterion) {
  ordered_json rows = ordered_json::array();
  bool all = true;
  for (int k = 1; k <= kCriterionCount; ++k) {
    if (criterion != 0 && k != criterion) continue;
    for (const auto& line : run_criterion(k, cx.threads)) {
      rows.push_back({{"criterion", line.id}, {"title", line.title}, {"pass", line.pass}, {"detail", line.detail}, {"seconds", line.seconds}});
      all = all && line.pass;
    }
  }
  cx.report["rows"] = std::move(rows);
  cx.report["all_pass"] = all;
  if (!all) cx.status = 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fuchscount: exact homomorphism counts and Lie-type bounds for Fuchsian groups"};
  app.name("fuchscount");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Context cx;
  app.add_option("--format", cx.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cx.cache_dir, "Character-table cache directory (else $FUCHSCOUNT_CACHE)");
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string sig, group, levi, classes, oracle = "formula", s_text, family, m_list, variant = "mod-m", type, label, jtable;
  std::uint64_t m = 0, q = 0, n_u = 0;
  int n = 0, criterion = 0;
  std::size_t count = 10;
  bool exact_orders = false, nontrivial = false, with_mult = false;
  std::function<void()> action;

  auto add_threads = [&](CLI::App* sub) { sub->add_option("--threads", cx.threads, "Worker threads")->check(CLI::Range(1u, 256u)); };

  auto* measure_cmd = app.add_subcommand("measure", "Measure of a signature");
  measure_cmd->add_option("--sig", sig, "Signature, e.g. o:g=0:m=2,3,7")->required();
  measure_cmd->callback([&] { action = [&] { cmd_measure(cx, sig); }; });

  auto* validate_cmd = app.add_subcommand("validate", "Fuchsian validity");
  validate_cmd->add_option("--sig", sig)->required();
  validate_cmd->callback([&] { action = [&] { cmd_validate(cx, sig); }; });

  auto* thresholds_cmd = app.add_subcommand("thresholds", "Thresholds N1..N5 and auxiliary constants");
  thresholds_cmd->add_option("--sig", sig)->required();
  thresholds_cmd->callback([&] { action = [&] { cmd_thresholds(cx, sig); }; });

  auto* qadm_cmd = app.add_subcommand("qadmissible", "Admissible field orders");
  qadm_cmd->add_option("--sig", sig);
  qadm_cmd->add_option("--m", m_list, "Periods as a comma list, instead of --sig");
  qadm_cmd->add_option("--variant", variant)->check(CLI::IsMember({"mod-m", "mod-2m"}));
  qadm_cmd->add_option("--count", count);
  qadm_cmd->add_option("--type", type, "Filter to good primes for this type");
  qadm_cmd->callback([&] { action = [&] { cmd_qadmissible(cx, sig, m_list, variant, count, type); }; });

  auto* chartab_cmd = app.add_subcommand("chartab", "Character table");
  chartab_cmd->add_option("--group", group)->required();
  chartab_cmd->add_flag("--multiplicities", with_mult, "Include eigenvalue multiplicity vectors");
  chartab_cmd->callback([&] { action = [&] { cmd_chartab(cx, group, with_mult); }; });

  auto* zeta_cmd = app.add_subcommand("zeta", "Witten zeta function");
  zeta_cmd->add_option("--group", group)->required();
  zeta_cmd->add_option("--s", s_text)->required();
  zeta_cmd->add_flag("--nontrivial", nontrivial, "Sum over nontrivial characters only");
  zeta_cmd->callback([&] { action = [&] { cmd_zeta(cx, group, s_text, nontrivial); }; });

  auto* hom_cmd = app.add_subcommand("homcount", "Count homomorphisms");
  hom_cmd->add_option("--sig", sig)->required();
  hom_cmd->add_option("--group", group)->required();
  hom_cmd->add_option("--classes", classes, "Class indices i,j,k for the elliptic generators");
  hom_cmd->add_flag("--exact-orders", exact_orders, "Require element orders exactly m_i");
  hom_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"formula", "oracle", "both"}));
  hom_cmd->add_flag("--timing", cx.timing, "Report elapsed_ms");
  add_threads(hom_cmd);
  hom_cmd->callback([&] { action = [&] { cmd_homcount(cx, sig, group, classes, exact_orders, oracle); }; });

  auto* epi_cmd = app.add_subcommand("epi", "Count epimorphisms by enumeration");
  epi_cmd->add_option("--sig", sig)->required();
  epi_cmd->add_option("--group", group)->required();
  add_threads(epi_cmd);
  epi_cmd->callback([&] { action = [&] { cmd_epi(cx, sig, group); }; });

  auto* alpha_cmd = app.add_subcommand("alpha", "Exact alpha of a Levi subgroup, or a stored exceptional value");
  alpha_cmd->add_option("--levi", levi);
  alpha_cmd->add_option("--type", type);
  alpha_cmd->add_option("--label", label);
  alpha_cmd->callback([&] { action = [&] { cmd_alpha(cx, levi, type, label); }; });

  auto* ab_cmd = app.add_subcommand("alphabound", "Classical alpha bound");
  ab_cmd->add_option("--levi", levi)->required();
  ab_cmd->callback([&] { action = [&] { cmd_alphabound(cx, levi); }; });

  auto* construct_cmd = app.add_subcommand("construct", "Order-m element with predicted centralizer");
  construct_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"GL", "SL", "Sp", "SO"}));
  construct_cmd->add_option("--n", n, "Natural-module dimension")->required();
  construct_cmd->add_option("--m", m)->required();
  construct_cmd->add_option("--q", q)->required();
  construct_cmd->callback([&] { action = [&] { cmd_construct(cx, family, n, m, q); }; });

  auto* jm_cmd = app.add_subcommand("jm", "Dimension of the variety of elements of order dividing m");
  jm_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"GL", "SL", "Sp", "SO"}));
  jm_cmd->add_option("--n", n, "Natural-module dimension")->required();
  jm_cmd->add_option("--m", m)->required();
  jm_cmd->callback([&] { action = [&] { cmd_jm(cx, family, n, m); }; });

  auto* dimhom_cmd = app.add_subcommand("dimhom", "Representation-variety dimension predictions");
  dimhom_cmd->add_option("--sig", sig)->required();
  dimhom_cmd->add_option("--type", type, "E8 E7 E6 F4 G2 or a small classical type such as D7");
  dimhom_cmd->add_option("--jtable", jtable, "User j-values m:j,... for exceptional types");
  dimhom_cmd->add_option("--family", family, "GL, Sp, SO-odd or SO-even")->check(CLI::IsMember({"GL", "Sp", "SO-odd", "SO-even"}));
  dimhom_cmd->add_option("--n", n_u);
  dimhom_cmd->callback([&] { action = [&] { cmd_dimhom(cx, sig, type, jtable, family, n_u); }; });

  auto* bounds_cmd = app.add_subcommand("bounds", "Exponents of the point-count bounds");
  bounds_cmd->add_option("--sig", sig)->required();
  bounds_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"GL", "SL", "Sp", "SO-odd", "SO-even"}));
  bounds_cmd->add_option("--n", n_u)->required();
  bounds_cmd->callback([&] { action = [&] { cmd_bounds(cx, sig, family, n_u); }; });

  auto* acc_cmd = app.add_subcommand("acceptance", "Run the acceptance criteria");
  acc_cmd->add_option("--criterion", criterion, "Single criterion 1..10; 0 runs all")->check(CLI::Range(0, kCriterionCount));
  add_threads(acc_cmd);
  acc_cmd->callback([&] { action = [&] { cmd_acceptance(cx, criterion); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(e.what()) + "\n" : app.help());
      return 0;
    }
    err << "fuchscount: " << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  cx.report = ordered_json::object();
  cx.report["command"] = command;
  try {
    action();
  } catch (const Error& e) {
    if (!is_hypothesis_kind(e.kind())) {
      err << "fuchscount: " << e.what() << "\n";
      return 1;
    }
    cx.report["error"] = std::string(error_kind_name(e.kind()));
    cx.report["message"] = e.what();
    cx.status = 2;
  } catch (const std::exception& e) {
    err << "fuchscount: " << e.what() << "\n";
    return 1;
  }
  cx.report["version"] = kToolVersion;
  cx.report["data_version"] = data_version();
  if (cx.format == "csv") write_csv(cx.report, out);
  else out << cx.report.dump() << "\n";
  return cx.status;
}

}  // namespace fuchs
