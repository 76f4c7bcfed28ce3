// super-o: command-line front end for the category O invariants.
//
// Exit codes: 0 answer, 1 refusal (out of scope, band or budget), 2 usage.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "supero/homdim.hpp"
#include "supero/linkage.hpp"
#include "supero/oracle.hpp"
#include "supero/socle.hpp"
#include "supero/verify.hpp"
#include "supero/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace supero;

namespace {

struct Config {
  std::size_t max_basis = 400000;
  long max_depth = 80;
  std::string format = "json";
  bool long_run = false;
  unsigned long seed = 1;
};

// A refusal the CLI reports with exit code 1 and a structured body.
struct Refusal {
  std::string kind;
  std::string reason;
};

struct UsageError {
  std::string message;
};

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// CSV and table output flatten one level: arrays of objects become rows.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object())
      flatten(v, key, rows);
    else if (v.is_array()) {
      if (v.empty()) rows.emplace_back(key, "");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object())
          flatten(v[i], key + "[" + std::to_string(i) + "]", rows);
        else
          rows.emplace_back(key + "[" + std::to_string(i) + "]", scalar_text(v[i]));
      }
    } else
      rows.emplace_back(key, scalar_text(v));
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const json& j, const Config& cfg, std::ostream& out) {
  if (cfg.format == "json" || cfg.format == "dot") {
    out << j.dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (cfg.format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_quote(k) << "," << csv_quote(v) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  const bool color = use_color();
  for (const auto& [k, v] : rows) {
    std::string key = k + std::string(width - k.size(), ' ');
    if (color) key = "\033[1m" + key + "\033[0m";
    out << key << "  " << v << "\n";
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  for (const auto& [lo, hi] : edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string linkage_dot(const AlgebraDescriptor& a, const Weight& w) {
  const auto g = up_arrow_hasse(a, w);
  std::vector<std::string> labels;
  for (const auto& n : g.nodes) labels.push_back(render(n));
  return dot_graph(a.name() + " linkage of " + render(w), labels, g.edges);
}

std::string bruhat_dot(const AlgebraDescriptor& a) {
  const auto elems = all_elements(weyl_family(a), weyl_rank(a));
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(render(e));
  return dot_graph(a.name() + " Bruhat order", labels, bruhat_covers(elems));
}

AlgebraDescriptor algebra_arg(const std::string& text) {
  try {
    return parse_algebra(text);
  } catch (const parse_error& e) {
    throw UsageError{e.what()};
  }
}

Weight weight_arg(const AlgebraDescriptor& a, const std::string& text) {
  try {
    return a.parse(text);
  } catch (const parse_error& e) {
    throw UsageError{e.what()};
  } catch (const basis_mismatch& e) {
    throw UsageError{e.what()};
  }
}

ParabolicSubgroup levi_arg(const AlgebraDescriptor& a, const std::string& text) {
  try {
    return parse_parabolic(weyl_family(a), weyl_rank(a), text);
  } catch (const parse_error& e) {
    throw UsageError{e.what()};
  } catch (const invalid_parameter& e) {
    throw UsageError{e.what()};
  }
}

json socle_json(const SimpleMultiset& s) {
  json arr = json::array();
  for (const auto& [w, m] : s) arr.push_back({{"weight", render(w)}, {"mult", m}});
  return arr;
}

json status_json(const DimStatus& s) {
  json j;
  j["status"] = to_string(s.tag);
  if (s.tag == DimStatus::Tag::Finite) j["value"] = s.value;
  if (s.even) {
    j["even"] = {{"measure", to_string(s.even->measure)},
                 {"kind", to_string(s.even->label.kind)},
                 {"weight", render(s.even->label.weight)},
                 {"levi", render(s.even->label.parabolic)}};
    if (s.even_value) j["even_value"] = *s.even_value;
  }
  if (s.tag == DimStatus::Tag::OutOfScope) j["reason"] = s.reason;
  j["anchor"] = s.anchor;
  return j;
}

json report_json(const SuiteReport& r) {
  json cases = json::array();
  int failed = 0;
  for (const auto& c : r.cases) {
    json k{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) k["detail"] = c.detail;
    if (!c.band.empty()) k["band"] = c.band;
    cases.push_back(std::move(k));
    if (!c.pass) ++failed;
  }
  return {{"suite", r.suite},
          {"pass", r.all_pass()},
          {"cases_total", r.cases.size()},
          {"cases_failed", failed},
          {"cases", std::move(cases)},
          {"anchor", "brute-force module computations against the closed formulas"}};
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Category O invariants for type I Lie superalgebras"};
  app.set_config("--config", "", "key=value configuration file");
  app.option_defaults()->always_capture_default();
  app.add_option("--max-basis", cfg.max_basis, "largest module basis the oracle may build")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", cfg.max_depth, "deepest truncation the oracle may build")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "table", "dot"}));
  app.add_flag("--long", cfg.long_run, "include the slow gl(4) sweeps");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.require_subcommand(1);
  app.fallthrough();

  std::string algebra, w1, w2, levi, kind = "verma", measure = "pd", element, graph_kind = "linkage";
  bool graph = false, use_oracle = false;

  auto* hom = app.add_subcommand("hom", "dimension of Hom between Verma modules");
  hom->add_option("--algebra", algebra)->required();
  hom->add_option("--from", w1, "source highest weight")->required();
  hom->add_option("--to", w2, "target highest weight")->required();
  hom->add_flag("--graph", graph, "emit the linkage diagram of the orbit of --to in DOT");

  auto* soc = app.add_subcommand("socle", "socle of the cokernel of a Verma inclusion");
  soc->add_option("--algebra", algebra)->required();
  soc->add_option("--top", w1, "highest weight of the larger Verma module")->required();
  soc->add_option("--sub", w2, "highest weight of the submodule")->required();
  soc->add_flag("--oracle", use_oracle, "compute by brute force instead of the formula");

  auto* ext = app.add_subcommand("ext1", "dim Ext^1 from a simple module to a Verma module");
  ext->add_option("--algebra", algebra)->required();
  ext->add_option("--simple", w1)->required();
  ext->add_option("--verma", w2)->required();

  auto* typ = app.add_subcommand("typical", "typicality of a weight");
  typ->add_option("--algebra", algebra)->required();
  typ->add_option("--weight", w1)->required();

  auto* pd = app.add_subcommand("pd", "projective or injective dimension of a structural module");
  pd->add_option("--algebra", algebra)->required();
  pd->add_option("--kind", kind)->check(CLI::IsMember({"simple", "verma", "parabolic-verma", "costandard", "kac", "projective-cover", "injective-envelope", "tilting"}));
  pd->add_option("--weight", w1)->required();
  pd->add_option("--levi", levi, "simple reflections of the Levi, e.g. s1,s3");
  pd->add_option("--measure", measure)->check(CLI::IsMember({"pd", "id"}));

  auto* fd = app.add_subcommand("findim", "finitistic dimension of the parabolic category or of a block");
  fd->add_option("--algebra", algebra)->required();
  fd->add_option("--levi", levi);
  fd->add_option("--weight", w1, "restrict to the block of this weight");

  auto* beq = app.add_subcommand("block-eq", "whether two pe(n) weights lie in one block");
  beq->add_option("--algebra", algebra)->required();
  beq->add_option("--weight", w1)->required();
  beq->add_option("--other", w2)->required();

  auto* lp = app.add_subcommand("lambda-plus", "highest weight of the simple module with given b^r-highest weight");
  lp->add_option("--algebra", algebra)->required();
  lp->add_option("--weight", w1)->required();

  auto* bg = app.add_subcommand("bigrassmannian", "whether a Weyl group element has one left and one right descent");
  bg->add_option("--algebra", algebra)->required();
  bg->add_option("--element", element, "one-line notation, e.g. 231")->required();

  auto* orc = app.add_subcommand("oracle", "brute-force verification");
  auto* ver = orc->add_subcommand("verify", "run a verification suite");
  std::string suite;
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  orc->require_subcommand(1);

  auto* gr = app.add_subcommand("graph", "DOT diagrams");
  gr->add_option("--algebra", algebra)->required();
  gr->add_option("--kind", graph_kind)->check(CLI::IsMember({"linkage", "bruhat"}));
  gr->add_option("--weight", w1, "orbit for the linkage diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  oracle_limits().max_basis = cfg.max_basis;
  oracle_limits().max_depth = cfg.max_depth;

  try {
    json out;
    std::string dot;
    int code = 0;
    if (*hom) {
      const auto a = algebra_arg(algebra);
      const Weight mu = weight_arg(a, w1), la = weight_arg(a, w2);
      if (graph || cfg.format == "dot") {
        dot = linkage_dot(a, la);
      } else {
        int d;
        if (a.kind == Kind::PE)
          d = hom_dim_verma_pe(a, mu, la);
        else if (a.kind == Kind::GL)
          d = hom_dim_verma_even(a, mu, la);
        else
          throw Refusal{"unsupported", "Verma Hom dimensions are implemented for gl(n) and pe(n)"};
        out = {{"dim", d}, {"anchor", "Verma Hom is one-dimensional exactly under strong linkage"}};
      }
    } else if (*soc) {
      const auto a = algebra_arg(algebra);
      const Weight top = weight_arg(a, w1), sub = weight_arg(a, w2);
      SimpleMultiset s;
      std::string anchor;
      if (use_oracle) {
        s = top == sub ? SimpleMultiset{} : socle_of_verma_quotient(a, top, sub, a.kind == Kind::GL);
        anchor = "brute-force socle of the truncated cokernel";
      } else if (a.kind == Kind::PE) {
        s = socle_cokernel_pe(a, top, sub);
        anchor = "pe socles from even socle multiplicities through lambda-plus shifted by eta";
      } else if (a.kind == Kind::GL) {
        const auto et = orbit_extreme(a, top, OrbitEnd::dominant), es = orbit_extreme(a, sub, OrbitEnd::dominant);
        if (!(et.weight == es.weight)) throw Refusal{"precondition-failed", "weights lie in different dot orbits"};
        s = top == sub ? SimpleMultiset{} : socle_cokernel_even(a, et.witness, es.witness, et.weight);
        anchor = "even socle multiplicities, regular block translated to the wall";
      } else {
        throw Refusal{"unsupported", "socles are implemented for gl(n) and pe(n)"};
      }
      out = {{"socle", socle_json(s)}, {"anchor", anchor}};
    } else if (*ext) {
      const auto a = algebra_arg(algebra);
      const auto r = ext1_simple_verma_pe(a, weight_arg(a, w1), weight_arg(a, w2));
      if (!r.value) throw Refusal{"out-of-scope", r.reason};
      out = {{"dim", *r.value}, {"anchor", "Ext^1 from a simple to a Verma module is the socle multiplicity of the dominant cokernel"}};
    } else if (*typ) {
      const auto a = algebra_arg(algebra);
      if (!a.super()) throw UsageError{"typicality needs a superalgebra"};
      out = {{"typical", is_typical(a, weight_arg(a, w1))}, {"anchor", "typicality is the non-vanishing of the product over odd roots"}};
    } else if (*pd) {
      const auto a = algebra_arg(algebra);
      if (!a.super()) throw UsageError{"structural dimensions need a superalgebra"};
      StructuralLabel l{parse_kind(kind), weight_arg(a, w1), levi_arg(a, levi)};
      const auto s = reduce_structural(a, l, measure == "pd" ? Measure::pd : Measure::id);
      out = status_json(s);
      if (s.tag == DimStatus::Tag::OutOfScope) code = 1;
    } else if (*fd) {
      const auto a = algebra_arg(algebra);
      const auto p = levi_arg(a, levi);
      if (w1.empty()) {
        if (!a.super()) throw UsageError{"finitistic dimension needs a superalgebra"};
        out = {{"value", findim_parabolic(a, p)}, {"anchor", "finitistic dimension of the parabolic category is 2l(w0) - 2l(w0^p)"}};
      } else {
        const auto s = findim_block_pe(a, weight_arg(a, w1), p);
        out = status_json(s);
        if (s.tag == DimStatus::Tag::OutOfScope) code = 1;
      }
    } else if (*beq) {
      const auto a = algebra_arg(algebra);
      if (a.kind != Kind::PE) throw UsageError{"block-eq needs pe(n)"};
      out = {{"equivalent", pe_block_equivalent(a, weight_arg(a, w1), weight_arg(a, w2))}, {"anchor", "pe blocks are dot orbits joined by odd-parity shifts"}};
    } else if (*lp) {
      const auto a = algebra_arg(algebra);
      out = {{"weight", render(lambda_plus_pe(a, weight_arg(a, w1)))}, {"anchor", "highest weight of the simple module with given b^r-highest weight"}};
    } else if (*bg) {
      const auto a = algebra_arg(algebra);
      WeylElement y;
      try {
        y = parse_element(weyl_family(a), element);
        check_group(a, y);
      } catch (const error& e) {
        throw UsageError{e.what()};
      }
      json left = descents(y, Side::left), right = descents(y, Side::right);
      out = {{"bigrassmannian", is_bigrassmannian(y)}, {"left_descents", left}, {"right_descents", right},
             {"anchor", "soc of the cokernel of Verma(y.0) in Verma(0) is simple iff y is bigrassmannian"}};
    } else if (*orc) {
      const auto r = run_suite(suite, cfg.long_run);
      out = report_json(r);
      if (!r.all_pass()) code = 1;
    } else if (*gr) {
      const auto a = algebra_arg(algebra);
      if (graph_kind == "bruhat")
        dot = bruhat_dot(a);
      else
        dot = linkage_dot(a, w1.empty() ? a.zero() : weight_arg(a, w1));
    }
    if (!dot.empty())
      std::cout << dot;
    else
      emit(out, cfg, std::cout);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Refusal& r) {
    emit(json{{"refused", true}, {"error", r.kind}, {"reason", r.reason}}, cfg, std::cout);
    return 1;
  } catch (const error& e) {
    std::string k = "refused";
    if (dynamic_cast<const band_violation*>(&e)) k = "band-violation";
    else if (dynamic_cast<const resource_exceeded*>(&e)) k = "resource-exceeded";
    else if (dynamic_cast<const unsupported*>(&e)) k = "unsupported";
    else if (dynamic_cast<const precondition_failed*>(&e)) k = "precondition-failed";
    else if (dynamic_cast<const not_integral*>(&e)) k = "not-integral";
    else if (dynamic_cast<const invalid_parameter*>(&e)) k = "invalid-parameter";
    emit(json{{"refused", true}, {"error", k}, {"reason", e.what()}}, cfg, std::cout);
    return 1;
  }
}
