// Command-line frontend: parses inputs, calls the library, and emits a
// JSON report to stdout or --out FILE.
//
// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fkb/biquandle.hpp"
#include "fkb/coloring.hpp"
#include "fkb/enumerate.hpp"
#include "fkb/moves.hpp"
#include "fkb/version.hpp"
#include "fkb/vssb.hpp"
#include "fkb/word.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts either a bare biquandle file or a `biq make` report (the table is
// then under "result").
fkb::FiniteKBiquandle load_biquandle(const std::string& path, bool skip_axioms = false) {
  json j = json::parse(read_file(path));
  if (!j.contains("table") && j.contains("result")) j = j["result"];
  return fkb::biquandle_from_json(j.dump(), skip_axioms);
}

fkb::Tuple parse_tuple(const std::string& text) {
  fkb::Tuple out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size())
      throw CLI::ValidationError("bad integer in tuple: '" + item + "'");
  }
  return out;
}

json word_list(const std::vector<fkb::FreeKBraidWord>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(w.str());
  return arr;
}

const char* verdict_name(fkb::Verdict v) {
  switch (v) {
    case fkb::Verdict::Equal: return "Equal";
    case fkb::Verdict::Distinct: return "Distinct";
    case fkb::Verdict::Unknown: return "Unknown";
  }
  return "?";
}

json axiom_report_json(const fkb::AxiomReport& rep) {
  auto entry = [](const fkb::AxiomReport::Entry& e) {
    json j;
    j["pass"] = e.pass;
    if (!e.pass) j["counterexample"] = e.counterexample;
    return j;
  };
  json j;
  j["equivariance"] = entry(rep.equivariance);
  j["involution"] = entry(rep.involution);
  j["far_commutativity"] = entry(rep.far_commutativity);
  j["tetrahedron"] = entry(rep.tetrahedron);
  j["all_pass"] = rep.all_pass();
  return j;
}

struct Ctx {
  json parameters;
  json result;
  std::string command;
  bool negative = false;  // true: exit 1
};

fkb::Involution parse_tau(const std::string& text, int m) {
  // "0:1" or "0:1,2:3"; empty means identity.
  std::vector<std::pair<int, int>> tr;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto pos = item.find(':');
      if (pos == std::string::npos)
        throw CLI::ValidationError("bad transposition (want p:q): '" + item + "'");
      tr.emplace_back(std::stoi(item.substr(0, pos)), std::stoi(item.substr(pos + 1)));
    }
  }
  return fkb::Involution(m, tr);
}

fkb::RelationFamily parse_family(const std::string& f) {
  if (f == "A") return fkb::RelationFamily::A;
  if (f == "R") return fkb::RelationFamily::R;
  if (f == "V") return fkb::RelationFamily::V;
  if (f == "AV") return fkb::RelationFamily::AV;
  throw CLI::ValidationError("unknown family: " + f);
}

void setup_gnk(CLI::App& app, Ctx& ctx) {
  auto* gnk = app.add_subcommand("gnk", "free k-braid group words");

  {
    auto* cmd = gnk->add_subcommand("reduce", "free-reduce a word");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "strand count")->required();
    cmd->add_option("--k", *k, "arity")->required();
    cmd->add_option("word", *text, "word in a{...} grammar")->required();
    cmd->callback([&ctx, n, k, text] {
      ctx.command = "gnk reduce";
      ctx.parameters = {{"n", *n}, {"k", *k}, {"word", *text}};
      auto w = fkb::parse_word(*text, *n, *k);
      auto r = fkb::free_reduce(w);
      ctx.result = {{"input", w.str()}, {"reduced", r.str()}, {"length", r.size()}};
    });
  }
  {
    auto* cmd = gnk->add_subcommand("eq", "bounded equality search");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto w1 = std::make_shared<std::string>();
    auto w2 = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(8);
    auto nodes = std::make_shared<long>(200000);
    auto expect = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--depth", *depth, "search depth budget");
    cmd->add_option("--nodes", *nodes, "search node budget");
    cmd->add_option("--expect", *expect)->check(CLI::IsMember({"equal", "distinct"}));
    cmd->add_option("word1", *w1)->required();
    cmd->add_option("word2", *w2)->required();
    cmd->callback([&ctx, n, k, w1, w2, depth, nodes, expect] {
      ctx.command = "gnk eq";
      ctx.parameters = {{"n", *n},         {"k", *k},         {"word1", *w1},
                        {"word2", *w2},    {"depth", *depth}, {"nodes", *nodes},
                        {"expect", *expect}};
      fkb::EqOptions opts;
      opts.depth = *depth;
      opts.nodes = *nodes;
      auto a = fkb::parse_word(*w1, *n, *k);
      auto b = fkb::parse_word(*w2, *n, *k);
      auto res = fkb::equal_bounded(a, b, opts);
      ctx.result = {{"verdict", verdict_name(res.verdict)},
                    {"nodes_visited", res.nodes_visited}};
      if (res.verdict == fkb::Verdict::Equal) ctx.result["path"] = word_list(res.path);
      if (res.verdict == fkb::Verdict::Distinct) ctx.result["witness"] = res.witness;
      if (*expect == "equal" && res.verdict != fkb::Verdict::Equal) ctx.negative = true;
      if (*expect == "distinct" && res.verdict != fkb::Verdict::Distinct)
        ctx.negative = true;
    });
  }
  {
    auto* cmd = gnk->add_subcommand("parity", "per-generator letter parities");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, k, text] {
      ctx.command = "gnk parity";
      ctx.parameters = {{"n", *n}, {"k", *k}, {"word", *text}};
      auto w = fkb::parse_word(*text, *n, *k);
      auto pv = fkb::parity_vector(w);
      json arr = json::array();
      for (auto b : pv) arr.push_back(static_cast<int>(b));
      ctx.result = {{"parity", arr}};
    });
  }
  gnk->require_subcommand(1);
}

void setup_biq(CLI::App& app, Ctx& ctx) {
  auto* biq = app.add_subcommand("biq", "finite k-biquandles");

  {
    auto* cmd = biq->add_subcommand("check", "run the axiom suite on a file");
    auto file = std::make_shared<std::string>();
    auto skip = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "biquandle JSON file")->required();
    cmd->add_flag("--skip-axioms", *skip, "load without the axiom gate");
    cmd->callback([&ctx, file, skip] {
      ctx.command = "biq check";
      ctx.parameters = {{"file", *file}, {"skip_axioms", *skip}};
      auto B = load_biquandle(*file, true);
      auto rep = fkb::check_axioms(B);
      ctx.result = {{"k", B.k()}, {"m", B.m()}, {"axioms", axiom_report_json(rep)}};
      if (!rep.all_pass()) ctx.negative = true;
    });
  }
  {
    auto* cmd = biq->add_subcommand("make", "emit a constructed biquandle");
    auto family = std::make_shared<std::string>();
    auto k = std::make_shared<int>(2);
    auto m = std::make_shared<int>(2);
    auto tau = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto star = std::make_shared<std::string>();
    auto circ = std::make_shared<std::string>();
    cmd->add_option("--family", *family)
        ->required()
        ->check(CLI::IsMember({"trivial", "gaussian", "involution", "conditional", "flat3"}));
    cmd->add_option("--k", *k, "arity");
    cmd->add_option("--m", *m, "carrier size");
    cmd->add_option("--tau", *tau, "involution, e.g. 0:1,2:3");
    cmd->add_option("--mu", *mu, "multiplicity vectors, e.g. 1;2;1,1");
    cmd->add_option("--star", *star, "row-major m*m table for x*y");
    cmd->add_option("--circ", *circ, "row-major m*m table for x o y");
    cmd->callback([&ctx, family, k, m, tau, mu, star, circ] {
      ctx.command = "biq make";
      ctx.parameters = {{"family", *family}, {"k", *k},   {"m", *m},      {"tau", *tau},
                        {"mu", *mu},         {"star", *star}, {"circ", *circ}};
      fkb::FiniteKBiquandle B;
      if (*family == "trivial") {
        B = fkb::FiniteKBiquandle::trivial(*k, *m);
      } else if (*family == "gaussian") {
        B = fkb::gaussian(*k);
      } else if (*family == "involution") {
        B = fkb::involution_kbiquandle(parse_tau(*tau, *m), *k);
      } else if (*family == "conditional") {
        auto t = parse_tau(*tau, *m);
        std::set<std::vector<int>> members;
        std::stringstream ss(*mu);
        std::string item;
        while (std::getline(ss, item, ';')) members.insert(parse_tuple(item));
        B = fkb::conditional_involution(t, fkb::MultiplicitySet(*k, t.t(), members), *k);
      } else {
        fkb::FlatBiquandle F(*m, parse_tuple(*star), parse_tuple(*circ));
        auto rep = fkb::flat_check(F, 3);
        if (!rep.all_pass())
          throw std::invalid_argument("flat tables fail flat_check: " +
                                      rep.entries.front().identity);
        B = fkb::flat_derived3(F);
      }
      ctx.result = json::parse(fkb::biquandle_to_json(B));
    });
  }
  {
    auto* cmd = biq->add_subcommand("iso", "isomorphism test for two files");
    auto f1 = std::make_shared<std::string>();
    auto f2 = std::make_shared<std::string>();
    cmd->add_option("file1", *f1)->required();
    cmd->add_option("file2", *f2)->required();
    cmd->callback([&ctx, f1, f2] {
      ctx.command = "biq iso";
      ctx.parameters = {{"file1", *f1}, {"file2", *f2}};
      auto a = load_biquandle(*f1, true);
      auto b = load_biquandle(*f2, true);
      bool iso = fkb::is_isomorphic(a, b);
      ctx.result = {{"isomorphic", iso}};
      if (!iso) ctx.negative = true;
    });
  }
  {
    auto* cmd = biq->add_subcommand("enum", "enumerate up to isomorphism");
    auto m = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto nontrivial = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(1);
    auto budget = std::make_shared<long long>(100000000);
    cmd->add_option("--m", *m)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_flag("--nontrivial", *nontrivial, "drop the identity map class");
    cmd->add_option("--jobs", *jobs, "worker count");
    cmd->add_option("--budget", *budget, "partial-assignment guard");
    cmd->callback([&ctx, m, k, nontrivial, jobs, budget] {
      ctx.command = "biq enum";
      ctx.parameters = {{"m", *m},
                        {"k", *k},
                        {"nontrivial", *nontrivial},
                        {"jobs", *jobs},
                        {"budget", *budget}};
      fkb::EnumerateOptions opts;
      opts.nontrivial_only = *nontrivial;
      opts.jobs = *jobs;
      opts.budget = *budget;
      auto res = fkb::enumerate_kbiquandles(*m, *k, opts);
      json entries = json::array();
      for (size_t i = 0; i < res.entries.size(); ++i) {
        json e = json::parse(fkb::biquandle_to_json(res.entries[i]));
        e["tag"] = fkb::tag_name(res.tags[i]);
        entries.push_back(std::move(e));
      }
      ctx.result = {{"count", res.entries.size()},
                    {"entries", entries},
                    {"stats",
                     {{"candidates_visited", res.stats.candidates_visited},
                      {"leaves", res.stats.leaves},
                      {"far_commutativity_failures", res.stats.far_commutativity_failures},
                      {"tetrahedron_failures", res.stats.tetrahedron_failures}}}};
    });
  }
  biq->require_subcommand(1);
}

void setup_color(CLI::App& app, Ctx& ctx) {
  auto* color = app.add_subcommand("color", "good colorings of strand graphs");

  {
    auto* cmd = color->add_subcommand("bind", "coloring binding number");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto chi1 = std::make_shared<std::string>();
    auto chi2 = std::make_shared<std::string>();
    auto full = std::make_shared<bool>(false);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--biquandle", *file)->required();
    cmd->add_option("--chi1", *chi1, "source colors, comma-separated")->required();
    cmd->add_option("--chi2", *chi2, "sink colors, comma-separated")->required();
    cmd->add_flag("--full", *full, "emit the full propagated coloring");
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, k, text, file, chi1, chi2, full] {
      ctx.command = "color bind";
      ctx.parameters = {{"n", *n},       {"k", *k},       {"word", *text},
                        {"biquandle", *file}, {"chi1", *chi1}, {"chi2", *chi2}};
      auto w = fkb::parse_word(*text, *n, *k);
      auto B = load_biquandle(*file);
      auto c1 = parse_tuple(*chi1);
      auto c2 = parse_tuple(*chi2);
      ctx.result = {{"binding_number", fkb::binding_number(w, B, c1, c2)}};
      auto col = fkb::propagate(w, B, c1);
      ctx.result["chi_out"] = col.chi_out;
      if (*full) ctx.result["edge_colors"] = col.edge_colors;
    });
  }
  {
    auto* cmd = color->add_subcommand("count", "number of good colorings");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--biquandle", *file)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, k, text, file] {
      ctx.command = "color count";
      ctx.parameters = {{"n", *n}, {"k", *k}, {"word", *text}, {"biquandle", *file}};
      auto w = fkb::parse_word(*text, *n, *k);
      auto B = load_biquandle(*file);
      ctx.result = {{"colorings", fkb::count_colorings(w, B)}};
    });
  }
  {
    auto* cmd = color->add_subcommand("homs", "fundamental-presentation hom count");
    auto n = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--biquandle", *file)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, k, text, file] {
      ctx.command = "color homs";
      ctx.parameters = {{"n", *n}, {"k", *k}, {"word", *text}, {"biquandle", *file}};
      auto w = fkb::parse_word(*text, *n, *k);
      auto B = load_biquandle(*file);
      auto P = fkb::fundamental_presentation(w);
      ctx.result = {{"generators", P.generator_count},
                    {"relations", P.relations.size()},
                    {"homs", fkb::hom_count(P, B)}};
    });
  }
  color->require_subcommand(1);
}

void setup_vssb(CLI::App& app, Ctx& ctx) {
  auto* vssb = app.add_subcommand("vssb", "virtual surface singular braids");

  {
    auto* cmd = vssb->add_subcommand("phi", "image in G_n^2");
    auto n = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, text] {
      ctx.command = "vssb phi";
      ctx.parameters = {{"n", *n}, {"word", *text}};
      auto w = fkb::parse_vssb(*text, *n);
      auto g = fkb::phi(w);
      ctx.result = {{"unreduced", g.str()}, {"reduced", fkb::free_reduce(g).str()}};
    });
  }
  {
    auto* cmd = vssb->add_subcommand("rho", "permutation image");
    auto n = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, text] {
      ctx.command = "vssb rho";
      ctx.parameters = {{"n", *n}, {"word", *text}};
      auto w = fkb::parse_vssb(*text, *n);
      auto p = fkb::rho(w);
      ctx.result = {{"rho", p.str()}, {"pure", p.is_identity()}};
    });
  }
  {
    auto* cmd = vssb->add_subcommand("invariant", "coloring binding number of phi(w)");
    auto n = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto chi1 = std::make_shared<std::string>();
    auto chi2 = std::make_shared<std::string>();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--biquandle", *file)->required();
    cmd->add_option("--chi1", *chi1)->required();
    cmd->add_option("--chi2", *chi2)->required();
    cmd->add_option("word", *text)->required();
    cmd->callback([&ctx, n, text, file, chi1, chi2] {
      ctx.command = "vssb invariant";
      ctx.parameters = {{"n", *n},       {"word", *text},  {"biquandle", *file},
                        {"chi1", *chi1}, {"chi2", *chi2}};
      auto w = fkb::parse_vssb(*text, *n);
      auto B = load_biquandle(*file);
      int v = fkb::vssb_invariant(w, B, parse_tuple(*chi1), parse_tuple(*chi2));
      ctx.result = {{"invariant", v}, {"phi_reduced", fkb::free_reduce(fkb::phi(w)).str()}};
    });
  }
  {
    auto* cmd = vssb->add_subcommand("verify", "relation sweep for rho and phi");
    auto n = std::make_shared<int>(2);
    auto family = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(8);
    auto states = std::make_shared<int>(4);
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--family", *family)->required()->check(CLI::IsMember({"A", "R", "V", "AV"}));
    cmd->add_option("--depth", *depth, "equality search depth");
    cmd->add_option("--states", *states, "extra sampled states beyond the initial one");
    cmd->callback([&ctx, n, family, depth, states] {
      ctx.command = "vssb verify";
      ctx.parameters = {{"n", *n}, {"family", *family}, {"depth", *depth}, {"states", *states}};
      auto fam = parse_family(*family);
      auto rrep = fkb::check_rho_respects(*n, fam);
      fkb::EqOptions eq;
      eq.depth = *depth;
      auto prep = fkb::check_phi_well_defined(*n, fam, *states, eq);
      json table = json::array();
      for (const auto& v : prep.relations) {
        json row = {{"label", v.label},
                    {"verdict", verdict_name(v.verdict)},
                    {"max_g_length", v.max_g_length}};
        if (!v.detail.empty()) row["detail"] = v.detail;
        table.push_back(std::move(row));
      }
      ctx.result = {{"rho",
                     {{"total", rrep.total},
                      {"failures", rrep.failures},
                      {"pass", rrep.pass()}}},
                    {"phi",
                     {{"relations", table},
                      {"states_per_relation", prep.states_per_relation},
                      {"failures", prep.failures},
                      {"unknowns", prep.unknowns},
                      {"multiplicativity_pass", prep.multiplicativity_pass},
                      {"pass", prep.pass()}}}};
      if (!rrep.pass() || !prep.pass()) ctx.negative = true;
    });
  }
  vssb->require_subcommand(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free k-braid groups, finite k-biquandles and braid monoid maps"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the report to FILE instead of stdout");

  Ctx ctx;
  setup_gnk(app, ctx);
  setup_biq(app, ctx);
  setup_color(app, ctx);
  setup_vssb(app, ctx);

  auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) std::cerr << "usage error: " << e.what() << "\n";
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();

  json report;
  report["schema"] = fkb::kReportSchema;
  report["version"] = fkb::kVersion;
  report["command"] = ctx.command;
  report["parameters"] = ctx.parameters;
  report["result"] = ctx.result;
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  std::string text = report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
  } else {
    std::cout << text;
  }
  return ctx.negative ? 1 : 0;
}
