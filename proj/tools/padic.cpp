// padic: command-line front end for the p-adic automata library.
//
// Exit codes: 0 certificate or plain result, 2 a search bound was exceeded,
// 1 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "padic/christol.hpp"
#include "padic/dsl.hpp"
#include "padic/finiteness.hpp"
#include "padic/serialize.hpp"
#include "padic/synthesis.hpp"
#include "padic/vdp.hpp"
#include "selfcheck.hpp"

namespace {

using namespace padic;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kBound = 2;

struct FunctionArgs {
  std::string poly, affine, automaton, vdp, fn;
  int p = 2;
};

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
  void write(const Json& j) const { write(j.dump(2)); }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    parts.push_back(cur);
  }
  return parts;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": invalid JSON: " + e.what());
  }
}

void add_function_options(CLI::App* cmd, FunctionArgs& a) {
  auto* g = cmd->add_option_group("function", "the function to analyze (exactly one)");
  g->add_option("--poly", a.poly, "polynomial coefficients, low degree first, e.g. \"0,0,1\"");
  g->add_option("--affine", a.affine, "a,b for f(x) = a + b x");
  g->add_option("--automaton", a.automaton, "transducer JSON file");
  g->add_option("--vdp", a.vdp, "van der Put series JSON file");
  g->add_option("--fn", a.fn, "presentation in the text syntax, e.g. \"poly p=2 [1, 3]\"");
  g->require_option(1);
  cmd->add_option("-p,--prime", a.p, "base for --poly and --affine")->check(CLI::Range(2, 1 << 20));
}

FunctionPresentation load_function(const FunctionArgs& a) {
  if (!a.fn.empty()) return parse_presentation(a.fn, std::filesystem::current_path());
  if (!a.automaton.empty()) return FunctionPresentation::automaton(transducer_from_json(read_json(a.automaton)));
  if (!a.vdp.empty()) {
    const auto f = load_presentation_file(a.vdp);
    if (f.kind() != "vdp") throw Error(a.vdp + " is not a van der Put series file");
    return f;
  }
  const Base base(a.p);
  if (!a.poly.empty()) {
    std::vector<RationalPadic> coeffs;
    for (const auto& c : split(a.poly, ',')) coeffs.push_back(RationalPadic::parse(base, c));
    return FunctionPresentation::polynomial(base, std::move(coeffs));
  }
  const auto ab = split(a.affine, ',');
  if (ab.size() != 2) throw Error("--affine expects two values a,b");
  return FunctionPresentation::affine(RationalPadic::parse(base, ab[0]), RationalPadic::parse(base, ab[1]));
}

Integer parse_index(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0 || sgn(v) < 0) throw Error("expected a non-negative integer, got \"" + s + "\"");
  return v;
}

TableSequence load_table(const std::string& path) {
  const Json j = read_json(path);
  const Base base(j.at("p").get<int>());
  TableSequence t{base, j.at("K").get<std::size_t>(), j.at("values").get<std::vector<int>>(),
                  j.value("alphabet", std::vector<std::string>{})};
  if (t.values.size() < enumeration_size(base, t.depth)) throw Error(path + ": fewer than p^K values");
  return t;
}

unsigned default_threads() {
  if (const char* env = std::getenv("PADIC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    std::cerr << "padic: ignoring invalid PADIC_THREADS=\"" << env << "\"\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic automata toolkit: transducers, van der Put series, kernels and finiteness checks"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: PADIC_THREADS or 1)")->check(CLI::Range(1, 1024));
  Output out;
  app.add_option("-o,--output", out.path, "write the result to a file instead of stdout");

  int code = kOk;

  // eval
  FunctionArgs eval_fn;
  std::string eval_x;
  std::size_t eval_n = 1;
  auto* eval = app.add_subcommand("eval", "value of f(x) mod p^n");
  add_function_options(eval, eval_fn);
  eval->add_option("-x", eval_x, "input, 0 <= x < p^n")->required();
  eval->add_option("-n", eval_n, "depth")->required()->check(CLI::PositiveNumber);
  eval->callback([&] {
    out.write(evaluate_mod(load_function(eval_fn), parse_index(eval_x), eval_n).get_str());
  });

  // lipschitz-check
  FunctionArgs lip_fn;
  std::size_t lip_depth = 8;
  auto* lip = app.add_subcommand("lipschitz-check", "depth-bounded 1-Lipschitz check with a witness on failure");
  add_function_options(lip, lip_fn);
  lip->add_option("-D,--depth", lip_depth, "inputs below p^D")->check(CLI::PositiveNumber);
  lip->callback([&] {
    const auto v = check_lipschitz_depth(load_function(lip_fn), lip_depth, threads);
    out.write(v ? to_json(*v) : Json{{"result", "Ok"}, {"depth", lip_depth}});
  });

  // vdp
  FunctionArgs vdp_fn;
  std::size_t vdp_K = 4;
  auto* vdp = app.add_subcommand("vdp", "van der Put coefficients below p^K");
  add_function_options(vdp, vdp_fn);
  vdp->add_option("-K,--depth", vdp_K, "depth")->check(CLI::PositiveNumber);
  vdp->callback([&] { out.write(to_json(extract(load_function(vdp_fn), vdp_K, threads))); });

  // synth
  FunctionArgs syn_fn;
  std::string syn_mode = "minimal";
  std::size_t syn_depth = 4;
  SynthesisOptions syn_opts;
  auto* syn = app.add_subcommand("synth", "build a transducer: naive (word-indexed) or minimal (residuals)");
  syn->add_option("mode", syn_mode, "naive or minimal (default: minimal)")->check(CLI::IsMember({"naive", "minimal"}));
  add_function_options(syn, syn_fn);
  syn->add_option("-D,--depth", syn_depth, "word length bound for the naive construction")->check(CLI::PositiveNumber);
  syn->add_option("--max-states", syn_opts.max_states, "state bound for the minimal construction");
  syn->add_option("--window", syn_opts.window, "comparison window for truncated tables");
  syn->add_option("--format", out.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  syn->callback([&] {
    const auto f = load_function(syn_fn);
    syn_opts.threads = threads;
    if (syn_mode == "naive") {
      const Transducer m = naive_automaton(f, syn_depth, threads);
      out.write(out.format == "dot" ? to_dot(m) : to_json(m).dump(2));
      return;
    }
    const SynthesisResult r = synthesize_minimal(f, syn_opts);
    if (out.format == "dot" && r.machine)
      out.write(to_dot(*r.machine));
    else
      out.write(to_json(r, f.base()));
    if (r.status != SynthesisResult::Status::Finite) code = kBound;
  });

  // minimize
  std::string min_file;
  auto* min = app.add_subcommand("minimize", "minimize a transducer");
  min->add_option("--automaton", min_file, "transducer JSON file")->required();
  min->add_option("--format", out.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  min->callback([&] {
    const Transducer m = minimize(transducer_from_json(read_json(min_file)));
    out.write(out.format == "dot" ? to_dot(m) : to_json(m).dump(2));
  });

  // kernel
  FunctionArgs ker_fn;
  std::string ker_dfao, ker_table;
  KernelOptions ker_opts;
  auto* ker = app.add_subcommand("kernel", "p-kernel of a DFAO, a value table, or the b_m of a function");
  auto* ker_src = ker->add_option_group("sequence", "the sequence (exactly one)");
  ker_src->add_option("--dfao", ker_dfao, "DFAO JSON file");
  ker_src->add_option("--table", ker_table, "JSON {p, K, values, alphabet}");
  ker_src->add_option("--poly", ker_fn.poly, "b_m of a polynomial");
  ker_src->add_option("--affine", ker_fn.affine, "b_m of an affine map");
  ker_src->add_option("--automaton", ker_fn.automaton, "b_m of a transducer");
  ker_src->add_option("--vdp", ker_fn.vdp, "b_m of a van der Put series");
  ker_src->add_option("--fn", ker_fn.fn, "b_m of a presentation in the text syntax");
  ker_src->require_option(1);
  ker->add_option("-p,--prime", ker_fn.p, "base for --poly and --affine");
  ker->add_option("-K,--depth", ker_opts.depth, "table depth (functions default to 8)");
  ker->add_option("--max-elems", ker_opts.max_elems, "kernel size bound");
  ker->add_option("--window", ker_opts.window, "comparison window in levels for tables");
  ker->add_option("--format", out.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  ker->callback([&] {
    ker_opts.threads = threads;
    SequencePresentation seq = DfaoSequence{Dfao{Base(2), 1, 0, {0, 0}, {0}, {}}};
    if (!ker_dfao.empty()) {
      seq = DfaoSequence{dfao_from_json(read_json(ker_dfao))};
    } else if (!ker_table.empty()) {
      seq = load_table(ker_table);
    } else {
      if (ker_opts.depth == 0) ker_opts.depth = 8;
      seq = CoefficientStream{extract(load_function(ker_fn), ker_opts.depth, threads)};
    }
    const auto result = p_kernel(seq, ker_opts);
    if (const auto* k = std::get_if<Kernel>(&result)) {
      if (out.format == "dot" && k->closed)
        out.write(to_dot(dfao_from_kernel(*k)));
      else
        out.write(to_json(*k));
      if (!k->closed) code = kBound;
    } else {
      out.write(to_json(std::get<KernelBoundExceeded>(result)));
      code = kBound;
    }
  });

  // dfao-eval
  std::string de_file, de_index;
  auto* de = app.add_subcommand("dfao-eval", "output of a DFAO on the base-p digits of n (least significant first)");
  de->add_option("--dfao", de_file, "DFAO JSON file")->required();
  de->add_option("-n", de_index, "index")->required();
  de->callback([&] {
    const Dfao d = dfao_from_json(read_json(de_file));
    const int sym = automatic_eval(d, parse_index(de_index));
    out.write(static_cast<std::size_t>(sym) < d.alphabet.size() ? d.alphabet[static_cast<std::size_t>(sym)]
                                                                 : std::to_string(sym));
  });

  // finiteness
  FunctionArgs fin_fn;
  FinitenessOptions fin_opts;
  auto* fin = app.add_subcommand("finiteness", "automaton finiteness criterion at depth K");
  add_function_options(fin, fin_fn);
  fin->add_option("-K,--depth", fin_opts.depth, "depth")->check(CLI::PositiveNumber);
  fin->add_option("--value-bound", fin_opts.value_bound, "bound on distinct b_m");
  fin->add_option("--kernel-bound", fin_opts.kernel_bound, "bound on kernel size");
  fin->add_option("--window", fin_opts.window, "kernel comparison window in levels");
  fin->callback([&] {
    fin_opts.threads = threads;
    const auto v = check_finiteness(load_function(fin_fn), fin_opts);
    out.write(to_json(v));
    if (!is_certificate(v)) code = kBound;
  });

  // cross-check
  FunctionArgs cc_fn;
  FinitenessOptions cc_opts;
  SynthesisOptions cc_synth;
  auto* cc = app.add_subcommand("cross-check", "finiteness criterion against residual synthesis");
  add_function_options(cc, cc_fn);
  cc->add_option("-K,--depth", cc_opts.depth, "depth")->check(CLI::PositiveNumber);
  cc->add_option("--value-bound", cc_opts.value_bound, "bound on distinct b_m");
  cc->add_option("--kernel-bound", cc_opts.kernel_bound, "bound on kernel size");
  cc->add_option("--max-states", cc_synth.max_states, "synthesis state bound");
  cc->callback([&] {
    cc_opts.threads = cc_synth.threads = threads;
    const auto f = load_function(cc_fn);
    const auto r = cross_check(f, cc_opts, cc_synth);
    out.write(to_json(r, f.base()));
    if (r.agreement == Agreement::Inconsistent) {
      std::cerr << "padic: finiteness criterion and synthesis disagree\n";
      code = kError;
    } else if (r.agreement == Agreement::InconclusiveConsistent) {
      code = kBound;
    }
  });

  // christol
  auto* chr = app.add_subcommand("christol", "algebraic relations for series over GF(p^l)");
  chr->require_subcommand(1);
  std::string chr_dfao, chr_series, chr_tau;
  std::size_t chr_l = 0;
  auto add_series = [&](CLI::App* c) {
    auto* g = c->add_option_group("series", "the series (exactly one)");
    g->add_option("--dfao", chr_dfao, "DFAO JSON file; symbols mapped through --tau");
    g->add_option("--series", chr_series, "JSON {p, l, coeffs} with field elements as integers");
    g->require_option(1);
    c->add_option("--tau", chr_tau, "field element per DFAO symbol, e.g. \"0,1\" (default: identity)");
    c->add_option("-l,--degree", chr_l, "field degree (default: least fitting the alphabet)");
  };
  auto load_series = [&](std::size_t precision) {
    if (!chr_series.empty()) {
      const Json j = read_json(chr_series);
      const GaloisField field(Base(j.at("p").get<int>()), j.at("l").get<std::size_t>());
      return SeriesOverFq::from_table(field, j.at("coeffs").get<std::vector<GaloisField::Elem>>());
    }
    const Dfao d = dfao_from_json(read_json(chr_dfao));
    std::size_t symbols = d.alphabet.size();
    for (int o : d.output) symbols = std::max(symbols, static_cast<std::size_t>(o) + 1);
    std::vector<GaloisField::Elem> tau;
    if (!chr_tau.empty()) {
      for (const auto& t : split(chr_tau, ',')) tau.push_back(static_cast<GaloisField::Elem>(std::stoul(t)));
    } else {
      for (std::size_t i = 0; i < symbols; ++i) tau.push_back(static_cast<GaloisField::Elem>(i));
    }
    std::size_t l = chr_l;
    if (l == 0) {
      GaloisField::Elem top = 0;
      for (auto e : tau) top = std::max(top, e);
      l = 1;
      while (d.base.pow(l) <= top) ++l;
    }
    return SeriesOverFq::from_dfao(GaloisField(d.base, l), d, tau, precision);
  };

  RelationSearch search;
  auto* find = chr->add_subcommand("find", "search for u_0 + u_1 F + ... + u_d F^d = 0");
  add_series(find);
  find->add_option("--max-d", search.max_degree, "largest degree in F")->check(CLI::PositiveNumber);
  find->add_option("--max-H", search.max_height, "largest degree of each u_i");
  find->add_option("--margin", search.margin, "extra equations beyond the unknown count");
  find->callback([&] {
    search.threads = threads;
    const SeriesOverFq s = load_series(required_precision(search));
    const auto r = find_relation(s, search);
    if (const auto* rel = std::get_if<AlgebraicRelation>(&r)) {
      out.write(to_json(s.field, *rel));
    } else {
      out.write(to_json(std::get<NotFoundWithinBounds>(r)));
      code = kBound;
    }
  });

  std::string rel_file;
  std::size_t verify_n = 128;
  auto* ver = chr->add_subcommand("verify", "check a relation modulo X^N");
  add_series(ver);
  ver->add_option("--relation", rel_file, "relation JSON file")->required();
  ver->add_option("-N,--precision", verify_n, "precision")->check(CLI::PositiveNumber);
  ver->callback([&] {
    const RelationDocument doc = relation_from_json(read_json(rel_file));
    if (chr_l == 0) chr_l = doc.field.degree();
    const SeriesOverFq s = load_series(verify_n);
    if (!(s.field == doc.field)) throw Error("relation and series live in different fields");
    out.write(to_json(verify_relation(s, doc.relation, verify_n)));
  });

  // export-dot
  std::string dot_auto, dot_dfao;
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a transducer or DFAO");
  auto* dot_src = dot->add_option_group("machine", "exactly one");
  dot_src->add_option("--automaton", dot_auto, "transducer JSON file");
  dot_src->add_option("--dfao", dot_dfao, "DFAO JSON file");
  dot_src->require_option(1);
  dot->callback([&] {
    out.write(!dot_auto.empty() ? to_dot(transducer_from_json(read_json(dot_auto)))
                                : to_dot(dfao_from_json(read_json(dot_dfao))));
  });

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the acceptance corpus and print a JSON report");
  vp->callback([&] {
    const Json report = selfcheck::report(selfcheck::run_all(threads));
    out.write(report);
    for (const auto& c : report.at("checks"))
      std::cerr << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << " " << c.at("id").get<int>() << " "
                << c.at("name").get<std::string>() << "\n";
    if (!report.at("all_pass").get<bool>()) code = kError;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  } catch (const ParseError& e) {
    std::cerr << "padic: parse error at " << e.what() << "\n";
    return kError;
  } catch (const NotIntegral& e) {
    std::cerr << "padic: not 1-Lipschitz: b_" << e.m.get_str() << " is not integral (B_m = "
              << e.coefficient.to_string() << ")\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "padic: " << e.what() << "\n";
    return kError;
  }
  return code;
}
