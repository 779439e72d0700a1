// darboux-lab: batch front-end over the certification library.  Every run is
// deterministic: identical arguments (or config files) produce identical
// output bytes.  Exit codes: 0 = certified success, 2 = a certified negative
// verdict (e.g. domination violated), 1 = usage/config/IO error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "dlab/convergence.hpp"
#include "dlab/darboux.hpp"
#include "dlab/enclosure_math.hpp"
#include "dlab/fourier.hpp"
#include "dlab/partition.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/sequences.hpp"
#include "json.hpp"

namespace {

using dlab::Enclosure;
using dlab::Rational;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// serialization helpers: every numeric value appears as exact "p/q" plus a
// decimal companion flagged approximate by its key/column name
// ---------------------------------------------------------------------------

void put_rational(json& j, const std::string& key, const Rational& r) {
  j[key] = r.to_fraction_string();
  j[key + "_approx"] = r.to_decimal_string();
}

void put_enclosure(json& j, const std::string& key, const Enclosure& e) {
  put_rational(j, key + "_lo", e.lo);
  put_rational(j, key + "_hi", e.hi);
}

void put_sum(json& j, const std::string& key, const dlab::SumValue& v) {
  if (std::holds_alternative<Rational>(v)) {
    put_rational(j, key, std::get<Rational>(v));
  } else {
    put_enclosure(j, key, std::get<Enclosure>(v));
  }
}

void put_eval(json& j, const std::string& key, const dlab::EvalResult& v) {
  if (std::holds_alternative<Rational>(v)) {
    put_rational(j, key, std::get<Rational>(v));
  } else {
    put_enclosure(j, key, std::get<Enclosure>(v));
  }
}

json interval_json(const dlab::Interval& iv) {
  json j;
  put_rational(j, "lo", iv.lo);
  put_rational(j, "hi", iv.hi);
  j["lo_closed"] = iv.lo_closed;
  j["hi_closed"] = iv.hi_closed;
  return j;
}

json step_function_json(const dlab::StepFunction& f) {
  json j;
  j["pieces"] = json::array();
  for (const dlab::StepPiece& p : f.pieces()) {
    json pj = interval_json(p.where);
    put_rational(pj, "value", p.value);
    j["pieces"].push_back(std::move(pj));
  }
  j["exceptions"] = json::array();
  for (const dlab::PointValue& e : f.exceptions()) {
    json ej;
    put_rational(ej, "at", e.at);
    put_rational(ej, "value", e.value);
    j["exceptions"].push_back(std::move(ej));
  }
  return j;
}

json piecewise_json(const dlab::PiecewiseFn& f) {
  if (std::holds_alternative<dlab::StepFunction>(f)) {
    return step_function_json(std::get<dlab::StepFunction>(f));
  }
  const dlab::KurtzTail& t = std::get<dlab::KurtzTail>(f);
  json j;
  j["kind"] = "kurtz";
  j["j"] = t.j;
  return j;
}

std::string method_slug(dlab::CertMethod m) {
  switch (m) {
    case dlab::CertMethod::ExactRange: return "exact-range";
    case dlab::CertMethod::RationalPoint: return "rational-point";
    case dlab::CertMethod::IrrationalPoint: return "irrational-point";
    case dlab::CertMethod::InsideCover: return "inside-cover";
    case dlab::CertMethod::EscapesCover: return "escapes-cover";
    case dlab::CertMethod::Unresolved: return "unresolved";
  }
  return "unknown";
}

json witness_json(const dlab::CellWitness& w) {
  json j;
  j["cell_index"] = w.cell_index;
  put_rational(j, "cell_lo", w.cell_lo);
  put_rational(j, "cell_hi", w.cell_hi);
  j["role"] = w.role == dlab::WitnessRole::Sup ? "sup" : "inf";
  j["method"] = method_slug(w.method);
  if (w.point) put_rational(j, "point", *w.point);
  if (w.irrational) {
    j["irrational"] = w.irrational->to_string();
    j["irrational_approx"] =
        dlab::bracket(*w.irrational, 60).midpoint().to_decimal_string();
  }
  if (w.enumeration_index) j["enumeration_index"] = *w.enumeration_index;
  if (w.escape_excess) put_rational(j, "escape_excess", *w.escape_excess);
  if (w.covering_component) j["covering_component"] = interval_json(*w.covering_component);
  if (w.value) put_rational(j, "value", *w.value);
  return j;
}

// ---------------------------------------------------------------------------
// CSV assembly
// ---------------------------------------------------------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : width_(header.size()) {
    append_row(header);
  }
  void add(std::vector<std::string> row) {
    row.resize(width_);
    append_row(row);
  }
  const std::string& text() const { return text_; }

 private:
  void append_row(const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text_ += ',';
      text_ += csv_escape(row[i]);
    }
    text_ += '\n';
  }
  std::size_t width_;
  std::string text_;
};

std::string frac(const Rational& r) { return r.to_fraction_string(); }
std::string approx(const Rational& r) { return r.to_decimal_string(); }

// ---------------------------------------------------------------------------
// option storage and shared parsing
// ---------------------------------------------------------------------------

struct Options {
  // global
  std::string out_path;
  std::string format = "json";
  std::string ell = "1/2";
  std::uint64_t seed = 0;
  // shared by several subcommands
  std::string kind = "G";
  std::string eps = "1/100";
  std::string x = "1/2";
  std::uint64_t j = 1;
  std::uint64_t jmax = 64;
  std::uint64_t k_small = 3;
  std::uint64_t K_big = 20;
  std::uint64_t probe_m = 0;  // 0 = derive from k
  std::string fn = "G";
  std::string partition = "uniform:8";
  std::string g_bound = "one";
  std::string mode = "ae";
  bool scale_by_index = false;
  bool single = false;
  std::string r_cut = "16";
  std::string r_list = "8,16,32,64";
  std::uint64_t quad_n = 1024;
  long long freq_count = 16;
  long long freq_den = 2;
  int prec = 56;
};

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected an integer or p/q fraction, got '" + text + "'");
  }
}

dlab::SequenceKind make_kind(const Options& opt) {
  auto fam = dlab::parse_sequence_family(opt.kind);
  if (!fam) {
    throw CLI::ValidationError("--kind", "expected one of F, G, typewriter, kurtz");
  }
  switch (*fam) {
    case dlab::SequenceFamily::RationalPoints: return dlab::SequenceKind::rational_points();
    case dlab::SequenceFamily::FatCover:
      return dlab::SequenceKind::fat_cover(parse_rational(opt.ell, "--ell"));
    case dlab::SequenceFamily::Typewriter: return dlab::SequenceKind::typewriter();
    case dlab::SequenceFamily::Kurtz: return dlab::SequenceKind::kurtz();
  }
  throw CLI::ValidationError("--kind", "unknown family");
}

dlab::FunctionDescriptor make_descriptor(const Options& opt) {
  if (opt.fn == "G") {
    return dlab::FatCoverDescriptor{dlab::FatCoverConfig{parse_rational(opt.ell, "--ell")}};
  }
  if (opt.fn == "rationals") return dlab::RationalsIndicatorDescriptor{};
  throw CLI::ValidationError("--fn", "expected G or rationals");
}

dlab::Partition make_partition(const Options& opt) {
  const std::string& spec = opt.partition;
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  try {
    if (spec.rfind("uniform:", 0) == 0) {
      return dlab::Partition::uniform(std::stoull(spec.substr(8)));
    }
    if (spec.rfind("random:", 0) == 0) {
      std::vector<std::string> parts = split(spec.substr(7), ':');
      std::uint64_t n = std::stoull(parts.at(0));
      std::uint64_t seed = parts.size() > 1 ? std::stoull(parts.at(1)) : opt.seed;
      return dlab::Partition::random(n, seed);
    }
    std::vector<Rational> pts;
    for (const std::string& p : split(spec, ',')) pts.push_back(Rational::parse(p));
    return dlab::Partition::from_breakpoints(std::move(pts));
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(
        "--partition", "expected uniform:n, random:n[:seed], or a breakpoint list (" +
                           std::string(e.what()) + ")");
  }
}

dlab::TransformProbe make_probe(const Options& opt) {
  if (opt.single) return dlab::TransformProbe::single_interval();
  return dlab::TransformProbe::fat_cover(
      dlab::FatCoverConfig{parse_rational(opt.ell, "--ell")}, opt.k_small);
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(parse_rational(cur, what));
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (out.empty()) throw CLI::ValidationError(what, "expected a comma-separated list");
  return out;
}

// ---------------------------------------------------------------------------
// subcommand handlers: return {output text, exit code}
// ---------------------------------------------------------------------------

struct RunResult {
  std::string text;
  int exit_code = 0;
};

std::string finish_json(json& j) { return j.dump(2) + "\n"; }

RunResult run_cauchy(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  Rational eps = parse_rational(opt.eps, "--eps");
  dlab::CauchyModulus m = dlab::cauchy_modulus(kind, eps);
  if (opt.format == "csv") {
    CsvTable t({"N", "bound", "bound_approx", "certificate"});
    Rational bound = std::holds_alternative<Rational>(m.bound_at_N)
                         ? std::get<Rational>(m.bound_at_N)
                         : std::get<Enclosure>(m.bound_at_N).hi;
    t.add({std::to_string(m.N), frac(bound), approx(bound), m.certificate});
    return {t.text(), 0};
  }
  json j;
  j["command"] = "cauchy";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  put_rational(j, "eps", eps);
  j["N"] = m.N;
  put_eval(j, "bound_at_N", m.bound_at_N);
  j["certificate"] = m.certificate;
  j["note"] = m.note;
  return {finish_json(j), 0};
}

RunResult run_defect(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  std::uint64_t k = opt.k_small;
  std::uint64_t probe = opt.probe_m ? opt.probe_m : k + 7;
  Enclosure d = dlab::l1_limit_defect(kind, k, probe);
  if (opt.format == "csv") {
    CsvTable t({"k", "probe_m", "defect_lo", "defect_lo_approx", "defect_hi", "defect_hi_approx"});
    t.add({std::to_string(k), std::to_string(probe), frac(d.lo), approx(d.lo), frac(d.hi),
           approx(d.hi)});
    return {t.text(), 0};
  }
  json j;
  j["command"] = "defect";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  j["k"] = k;
  j["probe_m"] = probe;
  put_enclosure(j, "defect", d);
  return {finish_json(j), 0};
}

RunResult run_pointwise(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  Rational x = parse_rational(opt.x, "--x");
  dlab::ConvergenceVerdict v = dlab::pointwise_profile(kind, x, opt.jmax);
  int code = v.certified ? 0 : 2;
  if (opt.format == "csv") {
    CsvTable t({"j", "value", "value_approx", "box_lo", "box_lo_approx", "box_hi",
                "box_hi_approx"});
    for (const dlab::TraceEntry& e : v.trace) {
      std::vector<std::string> row{std::to_string(e.index)};
      if (e.value) {
        row.push_back(frac(*e.value));
        row.push_back(approx(*e.value));
      } else {
        row.push_back("");
        row.push_back("");
      }
      if (e.box) {
        row.push_back(frac(e.box->lo));
        row.push_back(approx(e.box->lo));
        row.push_back(frac(e.box->hi));
        row.push_back(approx(e.box->hi));
      }
      t.add(std::move(row));
    }
    return {t.text(), code};
  }
  json j;
  j["command"] = "pointwise";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  put_rational(j, "x", x);
  j["jmax"] = opt.jmax;
  j["mode"] = dlab::to_string(v.mode);
  j["certified"] = v.certified;
  if (v.stabilized_at) j["stabilized_at"] = *v.stabilized_at;
  if (v.limit_value) put_eval(j, "limit", *v.limit_value);
  if (!v.blocks.empty()) {
    j["blocks"] = json::array();
    for (const dlab::OscillationBlock& b : v.blocks) {
      json bj;
      bj["block"] = b.block;
      bj["one_index"] = b.one_index;
      if (b.zero_index) bj["zero_index"] = *b.zero_index;
      j["blocks"].push_back(std::move(bj));
    }
  }
  j["note"] = v.note;
  return {finish_json(j), code};
}

RunResult run_inmeasure(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  Rational eps = parse_rational(opt.eps, "--eps");
  auto rows = dlab::in_measure_profile(kind, eps, opt.jmax);
  if (opt.format == "csv") {
    CsvTable t({"j", "measure", "measure_approx"});
    for (const auto& [idx, m] : rows) t.add({std::to_string(idx), frac(m), approx(m)});
    return {t.text(), 0};
  }
  json j;
  j["command"] = "inmeasure";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  put_rational(j, "eps", eps);
  j["jmax"] = opt.jmax;
  j["profile"] = json::array();
  for (const auto& [idx, m] : rows) {
    json row;
    row["j"] = idx;
    put_rational(row, "measure", m);
    j["profile"].push_back(std::move(row));
  }
  return {finish_json(j), 0};
}

RunResult run_dominate(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  std::vector<dlab::PiecewiseFn> terms;
  for (std::uint64_t i = 1; i <= opt.jmax; ++i) {
    dlab::PiecewiseFn term = dlab::sequence_term(kind, i);
    if (opt.scale_by_index) {
      term = dlab::linear_combine(Rational(static_cast<long long>(i)), term, Rational(0),
                                  dlab::PiecewiseFn{dlab::StepFunction()});
    }
    terms.push_back(std::move(term));
  }
  dlab::StepFunction bound;
  if (opt.g_bound == "one") {
    bound = dlab::StepFunction::constant(Rational(1));
  } else if (opt.g_bound == "zero") {
    bound = dlab::StepFunction();
  } else {
    bound = dlab::StepFunction::constant(parse_rational(opt.g_bound, "--g"));
  }
  dlab::DominationMode mode;
  if (opt.mode == "ae") {
    mode = dlab::DominationMode::AlmostEverywhere;
  } else if (opt.mode == "everywhere") {
    mode = dlab::DominationMode::Everywhere;
  } else {
    throw CLI::ValidationError("--mode", "expected ae or everywhere");
  }
  dlab::DominationReport r = dlab::dominated_check(terms, bound, mode);
  int code = r.dominated ? 0 : 2;
  if (opt.format == "csv") {
    CsvTable t({"dominated", "mode", "violating_term", "term_value", "term_value_approx",
                "bound_value", "bound_value_approx"});
    std::vector<std::string> row{r.dominated ? "true" : "false", opt.mode};
    row.push_back(r.violating_term ? std::to_string(1 + *r.violating_term) : "");
    if (r.term_value) {
      row.push_back(frac(*r.term_value));
      row.push_back(approx(*r.term_value));
    }
    t.add(std::move(row));
    return {t.text(), code};
  }
  json j;
  j["command"] = "dominate";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  j["terms"] = opt.jmax;
  j["scale_by_index"] = opt.scale_by_index;
  j["g"] = opt.g_bound;
  j["mode"] = opt.mode;
  j["dominated"] = r.dominated;
  if (r.violating_term) j["violating_term"] = 1 + *r.violating_term;  // 1-based index
  if (r.violation_cell) j["violation_cell"] = interval_json(*r.violation_cell);
  if (r.violation_point) put_rational(j, "violation_point", *r.violation_point);
  if (r.term_value) put_rational(j, "term_value", *r.term_value);
  if (r.bound_value) put_rational(j, "bound_value", *r.bound_value);
  return {finish_json(j), code};
}

RunResult run_darboux(const Options& opt) {
  dlab::FunctionDescriptor d = make_descriptor(opt);
  dlab::Partition p = make_partition(opt);
  dlab::DarbouxReport r = dlab::darboux_sums(d, p, opt.K_big);
  std::size_t unresolved = 0;
  for (const dlab::CellWitness& w : r.witnesses) {
    if (w.method == dlab::CertMethod::Unresolved) ++unresolved;
  }
  if (opt.format == "csv") {
    CsvTable t({"cell_index", "cell_lo", "cell_lo_approx", "cell_hi", "cell_hi_approx", "role",
                "method", "point", "point_approx", "value", "value_approx",
                "enumeration_index", "escape_excess", "escape_excess_approx"});
    for (const dlab::CellWitness& w : r.witnesses) {
      std::vector<std::string> row{std::to_string(w.cell_index), frac(w.cell_lo),
                                   approx(w.cell_lo), frac(w.cell_hi), approx(w.cell_hi),
                                   w.role == dlab::WitnessRole::Sup ? "sup" : "inf",
                                   method_slug(w.method)};
      row.push_back(w.point ? frac(*w.point) : "");
      row.push_back(w.point ? approx(*w.point) : "");
      row.push_back(w.value ? frac(*w.value) : "");
      row.push_back(w.value ? approx(*w.value) : "");
      row.push_back(w.enumeration_index ? std::to_string(*w.enumeration_index) : "");
      row.push_back(w.escape_excess ? frac(*w.escape_excess) : "");
      row.push_back(w.escape_excess ? approx(*w.escape_excess) : "");
      t.add(std::move(row));
    }
    return {t.text(), 0};
  }
  json j;
  j["command"] = "darboux";
  j["fn"] = opt.fn;
  if (opt.fn == "G") put_rational(j, "ell", parse_rational(opt.ell, "--ell"));
  j["partition"] = opt.partition;
  j["cells"] = p.cells();
  j["K"] = opt.K_big;
  put_sum(j, "upper_sum", r.upper_sum);
  put_sum(j, "lower_sum", r.lower_sum);
  if (r.truncation_depth) j["truncation_depth"] = *r.truncation_depth;
  j["unresolved_cells"] = unresolved;
  j["witnesses"] = json::array();
  for (const dlab::CellWitness& w : r.witnesses) j["witnesses"].push_back(witness_json(w));
  return {finish_json(j), 0};
}

RunResult run_gap(const Options& opt) {
  dlab::FunctionDescriptor d = make_descriptor(opt);
  Enclosure gap = dlab::riemann_gap_certificate(d, opt.K_big);
  if (opt.format == "csv") {
    CsvTable t({"gap_lower", "gap_lower_approx", "gap_upper", "gap_upper_approx"});
    t.add({frac(gap.lo), approx(gap.lo), frac(gap.hi), approx(gap.hi)});
    return {t.text(), 0};
  }
  json j;
  j["command"] = "gap";
  j["fn"] = opt.fn;
  if (opt.fn == "G") put_rational(j, "ell", parse_rational(opt.ell, "--ell"));
  j["K"] = opt.K_big;
  put_rational(j, "gap_lower", gap.lo);
  put_rational(j, "gap_upper", gap.hi);
  return {finish_json(j), 0};
}

RunResult run_ft(const Options& opt) {
  dlab::TransformProbe probe = make_probe(opt);
  if (opt.freq_den <= 0) throw CLI::ValidationError("--den", "must be positive");
  if (opt.freq_count < 0) throw CLI::ValidationError("--count", "must be nonnegative");
  struct Row {
    Rational freq;
    dlab::ComplexEnclosure v;
    Enclosure abs2;
  };
  std::vector<Row> rows;
  for (long long i = -opt.freq_count; i <= opt.freq_count; ++i) {
    Rational f(i, opt.freq_den);
    dlab::ComplexEnclosure v = dlab::transform_value(probe, f, opt.prec);
    rows.push_back({f, v, v.abs_squared()});
  }
  if (opt.format == "csv") {
    CsvTable t({"freq", "freq_approx", "re_lo", "re_lo_approx", "re_hi", "re_hi_approx",
                "im_lo", "im_lo_approx", "im_hi", "im_hi_approx", "abs2_lo", "abs2_lo_approx",
                "abs2_hi", "abs2_hi_approx"});
    for (const Row& r : rows) {
      t.add({frac(r.freq), approx(r.freq), frac(r.v.re.lo), approx(r.v.re.lo), frac(r.v.re.hi),
             approx(r.v.re.hi), frac(r.v.im.lo), approx(r.v.im.lo), frac(r.v.im.hi),
             approx(r.v.im.hi), frac(r.abs2.lo), approx(r.abs2.lo), frac(r.abs2.hi),
             approx(r.abs2.hi)});
    }
    return {t.text(), 0};
  }
  json j;
  j["command"] = "ft";
  j["single"] = opt.single;
  if (!opt.single) {
    put_rational(j, "ell", parse_rational(opt.ell, "--ell"));
    j["k"] = opt.k_small;
  }
  j["prec"] = opt.prec;
  j["values"] = json::array();
  for (const Row& r : rows) {
    json rj;
    put_rational(rj, "freq", r.freq);
    put_enclosure(rj, "re", r.v.re);
    put_enclosure(rj, "im", r.v.im);
    put_enclosure(rj, "abs2", r.abs2);
    j["values"].push_back(std::move(rj));
  }
  return {finish_json(j), 0};
}

RunResult run_plancherel(const Options& opt) {
  dlab::TransformProbe probe = make_probe(opt);
  Rational R = parse_rational(opt.r_cut, "--R");
  dlab::PlancherelReport r = dlab::plancherel_probe(probe, R, opt.quad_n);
  int code = r.brackets_target ? 0 : 2;
  if (opt.format == "csv") {
    CsvTable t({"R", "R_approx", "partial_lo", "partial_lo_approx", "partial_hi",
                "partial_hi_approx", "tail_bound", "tail_bound_approx", "target",
                "target_approx", "brackets_target", "slack", "slack_approx"});
    t.add({frac(R), approx(R), frac(r.partial.lo), approx(r.partial.lo), frac(r.partial.hi),
           approx(r.partial.hi), frac(r.tail_bound), approx(r.tail_bound), frac(r.target),
           approx(r.target), r.brackets_target ? "true" : "false", frac(r.slack),
           approx(r.slack)});
    return {t.text(), code};
  }
  json j;
  j["command"] = "plancherel";
  j["single"] = opt.single;
  if (!opt.single) {
    put_rational(j, "ell", parse_rational(opt.ell, "--ell"));
    j["k"] = opt.k_small;
  }
  put_rational(j, "R", R);
  j["n"] = opt.quad_n;
  put_enclosure(j, "partial", r.partial);
  put_rational(j, "target", r.target);
  put_rational(j, "tail_bound", r.tail_bound);
  j["brackets_target"] = r.brackets_target;
  put_rational(j, "slack", r.slack);
  return {finish_json(j), code};
}

RunResult run_l2profile(const Options& opt) {
  dlab::TransformProbe probe = make_probe(opt);
  std::vector<Rational> cutoffs = parse_rational_list(opt.r_list, "--R-list");
  dlab::ConvergenceVerdict v = dlab::improper_l2_profile(probe, cutoffs, opt.quad_n);
  int code = v.certified ? 0 : 2;
  if (opt.format == "csv") {
    CsvTable t({"R", "R_approx", "partial_lo", "partial_lo_approx", "partial_hi",
                "partial_hi_approx"});
    for (const dlab::TraceEntry& e : v.trace) {
      if (!e.value || !e.box) continue;
      t.add({frac(*e.value), approx(*e.value), frac(e.box->lo), approx(e.box->lo),
             frac(e.box->hi), approx(e.box->hi)});
    }
    return {t.text(), code};
  }
  json j;
  j["command"] = "l2profile";
  j["single"] = opt.single;
  if (!opt.single) {
    put_rational(j, "ell", parse_rational(opt.ell, "--ell"));
    j["k"] = opt.k_small;
  }
  j["n"] = opt.quad_n;
  j["mode"] = dlab::to_string(v.mode);
  j["certified"] = v.certified;
  j["cutoffs"] = json::array();
  for (const dlab::TraceEntry& e : v.trace) {
    if (!e.value || !e.box) continue;
    json row;
    put_rational(row, "R", *e.value);
    put_enclosure(row, "partial", *e.box);
    j["cutoffs"].push_back(std::move(row));
  }
  if (v.limit_value) put_eval(j, "limit", *v.limit_value);
  j["note"] = v.note;
  return {finish_json(j), code};
}

RunResult run_fourier_defect(const Options& opt) {
  dlab::FatCoverConfig cfg{parse_rational(opt.ell, "--ell")};
  dlab::RiemannDefectReport r = dlab::riemann_defect_summary(cfg, opt.k_small, opt.K_big);
  int code = r.defect ? 0 : 2;
  if (opt.format == "csv") {
    CsvTable t({"defect", "gap_lower", "gap_lower_approx", "gap_upper", "gap_upper_approx",
                "truncation_slack", "truncation_slack_approx", "l2_certified"});
    t.add({r.defect ? "true" : "false", frac(r.gap.lo), approx(r.gap.lo), frac(r.gap.hi),
           approx(r.gap.hi), frac(r.truncation_slack), approx(r.truncation_slack),
           r.l2_profile.certified ? "true" : "false"});
    return {t.text(), code};
  }
  json j;
  j["command"] = "fourier-defect";
  put_rational(j, "ell", cfg.ell);
  j["k"] = opt.k_small;
  j["K"] = opt.K_big;
  j["defect"] = r.defect;
  put_rational(j, "gap_lower", r.gap.lo);
  put_rational(j, "gap_upper", r.gap.hi);
  put_rational(j, "truncation_slack", r.truncation_slack);
  j["l2_certified"] = r.l2_profile.certified;
  j["l2_mode"] = dlab::to_string(r.l2_profile.mode);
  j["l2_cutoffs"] = json::array();
  for (const dlab::TraceEntry& e : r.l2_profile.trace) {
    if (!e.value || !e.box) continue;
    json row;
    put_rational(row, "R", *e.value);
    put_enclosure(row, "partial", *e.box);
    j["l2_cutoffs"].push_back(std::move(row));
  }
  j["domain_note"] = r.domain_note;
  j["conclusion"] = r.conclusion;
  return {finish_json(j), code};
}

RunResult run_term(const Options& opt) {
  dlab::SequenceKind kind = make_kind(opt);
  dlab::PiecewiseFn term = dlab::sequence_term(kind, opt.j);
  if (opt.format == "csv") {
    CsvTable t({"part", "lo", "lo_approx", "hi", "hi_approx", "lo_closed", "hi_closed", "at",
                "at_approx", "value", "value_approx"});
    if (std::holds_alternative<dlab::StepFunction>(term)) {
      const dlab::StepFunction& f = std::get<dlab::StepFunction>(term);
      for (const dlab::StepPiece& p : f.pieces()) {
        t.add({"piece", frac(p.where.lo), approx(p.where.lo), frac(p.where.hi),
               approx(p.where.hi), p.where.lo_closed ? "true" : "false",
               p.where.hi_closed ? "true" : "false", "", "", frac(p.value), approx(p.value)});
      }
      for (const dlab::PointValue& e : f.exceptions()) {
        t.add({"exception", "", "", "", "", "", "", frac(e.at), approx(e.at), frac(e.value),
               approx(e.value)});
      }
    } else {
      t.add({"kurtz", "", "", "", "", "", "", "", "", std::to_string(opt.j), ""});
    }
    return {t.text(), 0};
  }
  json j;
  j["command"] = "term";
  j["kind"] = dlab::to_token(kind.family);
  if (kind.family == dlab::SequenceFamily::FatCover) put_rational(j, "ell", kind.ell());
  j["j"] = opt.j;
  j["term"] = piecewise_json(term);
  return {finish_json(j), 0};
}

int write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : 1;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << opt.out_path << "' for writing\n";
    return 1;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing '" << opt.out_path << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact-arithmetic certificates for integration counterexamples"};
  app.set_config("--config", "", "Read options from a config file (one experiment per file)");
  app.require_subcommand(0, 1);
  app.fallthrough();

  app.add_option("--out", opt.out_path, "Write the report to this path instead of stdout");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--ell", opt.ell, "Width budget for the fat cover, as p/q in (0,1)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for random partition specs without one")
      ->capture_default_str();

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", opt.kind, "Sequence family: F, G, typewriter, kurtz")
        ->capture_default_str();
  };

  CLI::App* cauchy = app.add_subcommand("cauchy", "Least index certified to meet an L1 tolerance");
  add_kind(cauchy);
  cauchy->add_option("--eps", opt.eps, "Tolerance, as p/q")->capture_default_str();

  CLI::App* defect = app.add_subcommand("defect", "Enclosure of the distance from a term to the L1 limit");
  add_kind(defect);
  defect->add_option("--k", opt.k_small, "Term index")->capture_default_str();
  defect->add_option("--probe", opt.probe_m, "Probe depth (default k+7)");

  CLI::App* pointwise = app.add_subcommand("pointwise", "Pointwise behaviour of the terms at a point");
  add_kind(pointwise);
  pointwise->add_option("--x", opt.x, "Evaluation point in [0,1], as p/q")->capture_default_str();
  pointwise->add_option("--jmax", opt.jmax, "Index horizon")->capture_default_str();

  CLI::App* inmeasure = app.add_subcommand("inmeasure", "Superlevel-set measures along the sequence");
  add_kind(inmeasure);
  inmeasure->add_option("--eps", opt.eps, "Threshold in (0,1], as p/q")->capture_default_str();
  inmeasure->add_option("--jmax", opt.jmax, "Index horizon")->capture_default_str();

  CLI::App* dominate = app.add_subcommand("dominate", "Exact domination check against a step bound");
  add_kind(dominate);
  dominate->add_option("--jmax", opt.jmax, "Number of leading terms to check")->capture_default_str();
  dominate->add_option("--g", opt.g_bound, "Bound: one, zero, or a constant p/q")
      ->capture_default_str();
  dominate->add_option("--mode", opt.mode, "ae (null sets forgiven) or everywhere")
      ->check(CLI::IsMember({"ae", "everywhere"}))
      ->capture_default_str();
  dominate->add_flag("--scale-by-index", opt.scale_by_index,
                     "Scale the i-th term by i before checking");

  CLI::App* darboux = app.add_subcommand("darboux", "Upper/lower sums with per-cell certificates");
  darboux->add_option("--fn", opt.fn, "Function: G (fat-cover indicator) or rationals")
      ->capture_default_str();
  darboux->add_option("--partition", opt.partition,
                      "uniform:n, random:n[:seed], or comma-separated breakpoints")
      ->capture_default_str();
  darboux->add_option("-K,--K", opt.K_big, "Cover truncation depth")->capture_default_str();

  CLI::App* gap = app.add_subcommand("gap", "Certified enclosure of the Darboux integral gap");
  gap->add_option("--fn", opt.fn, "Function: G (fat-cover indicator) or rationals")
      ->capture_default_str();
  gap->add_option("-K,--K", opt.K_big, "Cover truncation depth")->capture_default_str();

  auto add_probe = [&](CLI::App* sub) {
    sub->add_flag("--single", opt.single, "Probe the unit-interval control instead of the cover");
    sub->add_option("-k,--k", opt.k_small, "Cover truncation depth")->capture_default_str();
  };

  CLI::App* ft = app.add_subcommand("ft", "Certified transform values on a frequency grid");
  add_probe(ft);
  ft->add_option("--count", opt.freq_count, "Frequencies -count..count over the denominator")
      ->capture_default_str();
  ft->add_option("--den", opt.freq_den, "Frequency denominator")->capture_default_str();
  ft->add_option("--prec", opt.prec, "Enclosure precision bits (>= 16)")->capture_default_str();

  CLI::App* plancherel = app.add_subcommand("plancherel", "Square-integral bracket at one cutoff");
  add_probe(plancherel);
  plancherel->add_option("--R", opt.r_cut, "Cutoff, as p/q")->capture_default_str();
  plancherel->add_option("--n", opt.quad_n, "Quadrature cells across [-R,R]")->capture_default_str();

  CLI::App* l2profile = app.add_subcommand("l2profile", "Square-integral growth along cutoffs");
  add_probe(l2profile);
  l2profile->add_option("--R-list", opt.r_list, "Comma-separated increasing cutoffs")
      ->capture_default_str();
  l2profile->add_option("--n", opt.quad_n, "Quadrature cells across [-R,R]")->capture_default_str();

  CLI::App* fdefect = app.add_subcommand(
      "fourier-defect", "Headline summary: square-integrable transform vs Darboux gap");
  fdefect->add_option("-k,--k", opt.k_small, "Cover truncation depth")->capture_default_str();
  fdefect->add_option("-K,--K", opt.K_big, "Gap certificate depth")->capture_default_str();

  CLI::App* term = app.add_subcommand("term", "Serialize one term of a sequence");
  add_kind(term);
  term->add_option("--j", opt.j, "Term index (>= 1)")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->configurable(true);
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  RunResult result;
  try {
    if (cauchy->parsed()) {
      result = run_cauchy(opt);
    } else if (defect->parsed()) {
      result = run_defect(opt);
    } else if (pointwise->parsed()) {
      result = run_pointwise(opt);
    } else if (inmeasure->parsed()) {
      result = run_inmeasure(opt);
    } else if (dominate->parsed()) {
      result = run_dominate(opt);
    } else if (darboux->parsed()) {
      result = run_darboux(opt);
    } else if (gap->parsed()) {
      result = run_gap(opt);
    } else if (ft->parsed()) {
      result = run_ft(opt);
    } else if (plancherel->parsed()) {
      result = run_plancherel(opt);
    } else if (l2profile->parsed()) {
      result = run_l2profile(opt);
    } else if (fdefect->parsed()) {
      result = run_fourier_defect(opt);
    } else if (term->parsed()) {
      result = run_term(opt);
    } else {
      std::cerr << app.help();
      return 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  int io_rc = write_output(opt, result.text);
  return io_rc != 0 ? io_rc : result.exit_code;
}
