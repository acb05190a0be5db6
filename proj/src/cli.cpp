#include "osa/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "osa/basis.hpp"
#include "osa/bracket.hpp"
#include "osa/checks.hpp"
#include "osa/parse.hpp"
#include "osa/verma.hpp"

namespace osa {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight load_weight(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read weight file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return weight_from_json(buf.str());
}

int run_check(const std::string& suite, std::uint64_t seed, long cases, int max_len, int max_size, const Params& p,
              std::ostream& out) {
  SuiteResult r;
  if (suite == "jacobi") {
    r = jacobi_suite(seed, cases, p, max_len);
  } else if (suite == "identities") {
    r = identity_suite(p, max_size, max_len);
  } else if (suite == "independence") {
    r.cases = 1;
    if (!independence_check_B0(max_size, max_len, p)) r.failures.push_back("B0 action matrix is rank deficient");
  } else if (suite == "oracle") {
    for (const char* g : {"1", "2", "1,1"}) {
      OracleReport rep = concrete_oracle(Partition::parse(g), p, max_size);
      r.cases += rep.pairs;
      if (!rep.ok) r.failures.push_back("gamma=" + std::string(g) + ": " + rep.failure);
    }
  } else {
    throw Usage("unknown suite " + suite);
  }
  out << "suite " << suite << ": " << r.cases << " cases, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) out << "  " << f << '\n';
  return r.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"open string algebra engine", "osa-cli"};
  app.require_subcommand(1);
  int lambda = 1, lambda_f = 1;
  app.add_option("--lambda", lambda, "number of colors")->check(CLI::PositiveNumber);
  app.add_option("--lambda-f", lambda_f, "number of flavors")->check(CLI::PositiveNumber);

  std::string e1, e2, basis = "b0", gamma, weight_file, out_file, suite;
  int max_size = -1, max_len = -1;
  long cases = 200;
  std::uint64_t seed = 1;
  bool show_inertia = false;

  auto* br = app.add_subcommand("bracket", "bracket of two elements");
  br->add_option("a", e1)->required();
  br->add_option("b", e2)->required();
  br->add_option("--basis", basis)->check(CLI::IsMember({"raw", "b0", "b4"}));
  br->add_option("--lambda", lambda);
  br->add_option("--lambda-f", lambda_f);

  auto* ac = app.add_subcommand("act", "act with an element on chains");
  ac->add_option("element", e1)->required();
  ac->add_option("chains", e2)->required();

  auto* rw = app.add_subcommand("rewrite", "canonical form in a basis");
  rw->add_option("element", e1)->required();
  rw->add_option("--basis", basis)->check(CLI::IsMember({"b0", "b4"}));

  auto* cl = app.add_subcommand("classify", "triangular class of each term");
  cl->add_option("element", e1)->required();

  auto* wt = app.add_subcommand("weight", "weight of a Young diagram");
  wt->add_option("--gamma", gamma)->required();
  wt->add_option("--out", out_file);

  auto* gr = app.add_subcommand("gram", "Gram matrix of the contravariant form");
  auto* wopt = gr->add_option("--weight", weight_file);
  gr->add_option("--gamma", gamma)->excludes(wopt);
  gr->add_option("--max-size", max_size)->required();
  gr->add_flag("--inertia", show_inertia);

  auto* ck = app.add_subcommand("check", "consistency suites");
  ck->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"jacobi", "identities", "independence", "oracle"}));
  ck->add_option("--seed", seed);
  ck->add_option("--cases", cases);
  ck->add_option("--max-len", max_len);
  ck->add_option("--max-size", max_size);

  // Global options are accepted after the subcommand as well.
  for (auto* sub : {ac, rw, cl, wt, gr, ck}) {
    sub->add_option("--lambda", lambda);
    sub->add_option("--lambda-f", lambda_f);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Params p(lambda, lambda_f);
    if (*br) {
      Element r = bracket(parse_element(e1, p), parse_element(e2, p), p);
      if (basis == "b0" && br->count("--basis")) r = to_B0(r, p);
      if (basis == "b4") r = to_B4(r, p);
      out << render(r) << '\n';
    } else if (*ac) {
      out << render(act(parse_element(e1, p), parse_chains(e2, p), p)) << '\n';
    } else if (*rw) {
      const Element e = parse_element(e1, p);
      out << render(basis == "b4" ? to_B4(e, p) : to_B0(e, p)) << '\n';
    } else if (*cl) {
      for (const auto& [g, c] : parse_element(e1, p)) out << render(g) << ": " << class_name(classify(g)) << '\n';
    } else if (*wt) {
      const std::string text = weight_to_json(weight_from_partition(Partition::parse(gamma), p));
      if (out_file.empty()) {
        out << text << '\n';
      } else {
        std::ofstream f(out_file);
        if (!f) throw Usage("cannot write " + out_file);
        f << text << '\n';
      }
    } else if (*gr) {
      if (weight_file.empty() && gamma.empty()) throw Usage("gram needs --weight or --gamma");
      const Weight w = weight_file.empty() ? weight_from_partition(Partition::parse(gamma), p) : load_weight(weight_file);
      const GramMatrix g = gram_matrix(w, max_size);
      out << render(g);
      if (show_inertia) {
        const Inertia in = inertia(g);
        out << "inertia: positive " << in.positive << " zero " << in.zero << " negative " << in.negative << '\n';
        for (const auto& v : in.radical) {
          out << "radical:";
          for (const auto& x : v) out << ' ' << render_rational(x);
          out << '\n';
        }
      }
    } else if (*ck) {
      int len = max_len;
      int size = max_size;
      if (suite == "jacobi") len = len < 0 ? 2 : len;
      if (suite == "identities") {
        len = len < 0 ? 5 : len;
        size = size < 0 ? 3 : size;
      }
      if (suite == "independence") {
        len = len < 0 ? 3 : len;
        size = size < 0 ? 1 : size;
      }
      if (suite == "oracle") size = size < 0 ? 2 : size;
      return run_check(suite, seed, cases, len, size, p, out);
    }
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace osa
