// Command line front end. Subcommands compute the two-variable chromatic
// polynomial of a signed or unsigned graph, evaluate it, and cross-check the
// identities the library promises. Exit codes: 0 success, 1 a verification
// failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/coloring_count.hpp"
#include "sgchrom/graph_doc.hpp"
#include "sgchrom/orientation.hpp"
#include "sgchrom/verify.hpp"

namespace {

using namespace sgchrom;

struct Options {
  std::string file;
  bool zero_free = false;
  bool json = false;
  bool oracle = false;
  bool acyclic = false;
  std::string method = "dc";
  int k = 0;
  int l = 0;
  int kmax = 3;
  int lmax = 3;
  int jobs = 1;
  long long memo_cap = -1;  // -1: unlimited
};

SignedGraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return to_graph(parse_graph_text(text));
}

Convention pick_convention(const SignedGraph& g, bool zero_free) {
  if (g.mode() == GraphMode::Unsigned) {
    if (zero_free) throw std::runtime_error("--zero-free applies to signed graphs");
    return Convention::Unsigned;
  }
  return zero_free ? Convention::ZeroFree : Convention::Signed;
}

Memo make_memo(const Options& opt) {
  long long cap = opt.memo_cap;
  if (cap < 0) {
    if (const char* env = std::getenv("SGCHROM_MEMO_CAP")) cap = std::atoll(env);
  }
  if (cap < 0) return Memo();
  return Memo(static_cast<std::size_t>(cap));
}

PolyResult compute(const SignedGraph& g, Convention conv, const Options& opt, Memo& memo) {
  if (opt.method == "dc") {
    switch (conv) {
      case Convention::Signed: return poly_signed_dc(g, &memo);
      case Convention::ZeroFree: return poly_zero_free_dc(g, &memo);
      case Convention::Unsigned: return poly_unsigned_dc(g, &memo);
    }
  }
  if (opt.method == "subset") {
    switch (conv) {
      case Convention::Signed: return poly_signed_subset(g, &memo);
      case Convention::ZeroFree: return poly_zero_free_subset(g, &memo);
      case Convention::Unsigned: return poly_unsigned_subset(g, &memo);
    }
  }
  if (opt.method == "interp") return poly_interpolated(g, conv, opt.jobs);
  throw std::runtime_error("unknown method '" + opt.method + "'");
}

void print_poly(const BivarPoly& p, Convention conv, bool json) {
  if (json) {
    nlohmann::json out;
    out["convention"] = convention_name(conv);
    out["terms"] = nlohmann::json::array();
    for (const auto& [i, j, coeff] : ordered_terms(p)) {
      nlohmann::json term;
      term["i"] = i;
      term["j"] = j;
      term["coeff"] = coeff.str();
      out["terms"].push_back(term);
    }
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << "convention: " << convention_name(conv) << '\n';
  std::cout << to_string(p) << '\n';
}

int cmd_poly(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  const Convention conv = pick_convention(g, opt.zero_free);
  Memo memo = make_memo(opt);
  const PolyResult r = compute(g, conv, opt, memo);
  print_poly(r.poly, conv, opt.json);
  return 0;
}

int cmd_eval(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  const Convention conv = pick_convention(g, opt.zero_free);
  Memo memo = make_memo(opt);
  const PolyResult r = compute(g, conv, opt, memo);
  const Integer value = eval_at_kl(r, opt.k, opt.l);
  std::cout << value << '\n';
  if (opt.oracle) {
    Integer counted;
    switch (conv) {
      case Convention::Signed: counted = count_signed(g, opt.k, opt.l, opt.jobs); break;
      case Convention::ZeroFree: counted = count_zero_free(g, opt.k, opt.l, opt.jobs); break;
      case Convention::Unsigned: counted = count_unsigned(g, opt.k, opt.l, opt.jobs); break;
    }
    if (counted != value) {
      std::cerr << "mismatch: polynomial gives " << value << ", direct count gives " << counted
                << '\n';
      return 1;
    }
    std::cout << "count agrees" << '\n';
  }
  return 0;
}

int cmd_independence(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  if (g.mode() != GraphMode::Signed || !g.links_only())
    throw std::runtime_error("independence needs a link-only signed graph");
  print_poly(independence_poly(g), Convention::Signed, opt.json);
  return 0;
}

int cmd_antibalance(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  if (g.mode() != GraphMode::Signed)
    throw std::runtime_error("antibalance needs a signed graph");
  print_poly(antibalance_poly(g), Convention::Signed, opt.json);
  return 0;
}

int cmd_orientations(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  if (opt.acyclic) {
    std::cout << count_acyclic(g) << '\n';
  } else {
    std::cout << enumerate_orientations(g).size() << '\n';
  }
  return 0;
}

int cmd_reciprocity(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  Memo memo = make_memo(opt);
  const ReciprocityVerdict v = check_reciprocity(g, opt.k, opt.l, &memo);
  std::cout << "evaluation at negated arguments: " << v.lhs << '\n';
  std::cout << "orientation-weighted count:      " << v.rhs << '\n';
  std::cout << (v.pass ? "agree" : "MISMATCH") << '\n';
  return v.pass ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  const SignedGraph g = load_graph(opt.file);
  VerifyOptions vo;
  vo.kmax = opt.kmax;
  vo.lmax = opt.lmax;
  vo.jobs = opt.jobs;
  bool all_pass = true;
  for (const CheckResult& r : run_identity_suite(g, vo)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-variable chromatic polynomials of signed graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads for counting")->check(CLI::PositiveNumber);
  app.add_option("--memo-cap", opt.memo_cap,
                 "max cached subproblems (0 disables caching; default unlimited, or "
                 "SGCHROM_MEMO_CAP)");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "graph file, or - for stdin")->required();
  };

  CLI::App* poly = app.add_subcommand("poly", "print the polynomial");
  add_file(poly);
  poly->add_flag("--zero-free", opt.zero_free, "use the zero-free convention");
  poly->add_option("--method", opt.method, "dc, subset or interp")
      ->check(CLI::IsMember({"dc", "subset", "interp"}));
  poly->add_flag("--json", opt.json, "emit JSON");

  CLI::App* eval = app.add_subcommand("eval", "evaluate at (k,l)");
  add_file(eval);
  eval->add_option("-k", opt.k, "inner colors per sign")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("-l", opt.l, "outer colors per sign")->required()->check(CLI::NonNegativeNumber);
  eval->add_flag("--zero-free", opt.zero_free, "use the zero-free convention");
  eval->add_flag("--oracle", opt.oracle, "cross-check against direct counting");

  CLI::App* indep = app.add_subcommand("independence", "independence polynomial");
  add_file(indep);
  indep->add_flag("--json", opt.json, "emit JSON");

  CLI::App* anti = app.add_subcommand("antibalance", "antibalance polynomial");
  add_file(anti);
  anti->add_flag("--json", opt.json, "emit JSON");

  CLI::App* orient = app.add_subcommand("orientations", "count orientations");
  add_file(orient);
  orient->add_flag("--acyclic", opt.acyclic, "count only acyclic orientations");

  CLI::App* recip = app.add_subcommand("reciprocity", "check the negative-argument identity");
  add_file(recip);
  recip->add_option("-k", opt.k, "inner colors per sign")->required()->check(CLI::PositiveNumber);
  recip->add_option("-l", opt.l, "outer colors per sign")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_file(verify);
  verify->add_option("--kmax", opt.kmax, "largest k tested")->check(CLI::NonNegativeNumber);
  verify->add_option("--lmax", opt.lmax, "largest l tested")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poly->parsed()) return cmd_poly(opt);
    if (eval->parsed()) return cmd_eval(opt);
    if (indep->parsed()) return cmd_independence(opt);
    if (anti->parsed()) return cmd_antibalance(opt);
    if (orient->parsed()) return cmd_orientations(opt);
    if (recip->parsed()) return cmd_reciprocity(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
