// wittzeta: Witt vector calculator and zeta functions of varieties over
// finite fields. Every command prints one JSON document on stdout; errors go
// to stderr as {"error": {...}} with a nonzero exit code.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wittzeta/acceptance.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/json_io.hpp"
#include "wittzeta/rational.hpp"
#include "wittzeta/zeta.hpp"

namespace {

using namespace wittzeta;
using io::Json;
using W = WittVector<Integer>;

enum ExitCode { kOk = 0, kFailed = 1, kMalformed = 2, kIntegrality = 3, kBudget = 4, kPrecision = 5 };

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON, or the contents of a file.
Json read_document(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) return io::parse(t);
  return io::parse(read_file(arg));
}

VarietySpec read_spec(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && t[0] == '{') return io::spec_from_json(io::parse(t));
  if (std::filesystem::is_regular_file(arg)) return io::spec_from_json(io::parse(read_file(arg)));
  return builtin_spec(t);
}

CountingOptions counting_options() {
  CountingOptions options;
  if (const char* env = std::getenv("WITTZETA_ENUM_BUDGET")) {
    const Integer budget = parse_integer(env);
    if (budget < 1 || !budget.fits_ulong_p()) throw InputError("WITTZETA_ENUM_BUDGET must be a positive integer");
    options.enumeration_budget = budget.get_ui();
  }
  return options;
}

Integer require_integer(const std::string& text) { return parse_integer(trim(text)); }

struct WittArgs {
  std::string op;
  std::vector<std::string> teich;
  std::vector<std::string> witt;
  std::string ghost;
  std::optional<std::size_t> precision;
  std::size_t index = 0;
};

std::vector<W> operands(const WittArgs& a) {
  std::vector<W> out;
  for (const std::string& doc : a.witt) out.push_back(io::witt_from_json<W>(read_document(doc)));
  if (!a.teich.empty() && !a.precision) throw InputError("--teich needs -N");
  for (const std::string& x : a.teich) out.push_back(teichmuller(require_integer(x), *a.precision));
  if (a.precision) {
    for (W& w : out) {
      if (w.precision() < *a.precision) {
        throw PrecisionError("operand precision below -N", *a.precision, w.precision());
      }
      w = w.truncate(*a.precision);
    }
  }
  return out;
}

W single(const std::vector<W>& ops, const std::string& op) {
  if (ops.size() != 1) throw InputError("'" + op + "' takes exactly one operand");
  return ops.front();
}

Json cmd_witt(const WittArgs& a) {
  if (a.op == "unghost") {
    if (a.ghost.empty()) throw InputError("unghost needs --ghost");
    GhostVector<Integer> g = io::ghost_from_json(read_document(a.ghost));
    if (a.precision) {
      if (g.size() < *a.precision) throw PrecisionError("ghost vector shorter than -N", *a.precision, g.size());
      g = GhostVector<Integer>(std::vector<Integer>(g.coords().begin(), g.coords().begin() + *a.precision));
    }
    return io::witt_to_json(ghost_inverse(g));
  }
  const std::vector<W> ops = operands(a);
  if (a.op == "add" || a.op == "mul") {
    if (ops.size() < 2) throw InputError("'" + a.op + "' takes at least two operands");
    W acc = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) acc = a.op == "add" ? acc + ops[i] : acc * ops[i];
    return io::witt_to_json(acc);
  }
  if (a.op == "neg") return io::witt_to_json(-single(ops, a.op));
  if (a.op == "teich") return io::witt_to_json(single(ops, a.op));
  if (a.op == "ghost") return io::ghost_to_json(ghost(single(ops, a.op)));
  if (a.op == "frob") {
    if (a.index == 0) throw InputError("frob needs --n >= 1");
    return io::witt_to_json(frobenius(single(ops, a.op), a.index));
  }
  throw InputError("unknown witt operation '" + a.op + "'");
}

Json error_object(const char* kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

int report(const Json& error, int code) {
  std::cerr << error.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt vectors and zeta functions of varieties over finite fields"};
  app.require_subcommand(1);

  WittArgs witt_args;
  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic in W_N(Z)");
  witt->add_option("op", witt_args.op, "add | mul | neg | teich | ghost | unghost | frob")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "neg", "teich", "ghost", "unghost", "frob"}));
  witt->add_option("--teich", witt_args.teich, "Teichmüller operand [a] (repeatable)");
  witt->add_option("--witt", witt_args.witt, "Witt vector operand, inline JSON or file (repeatable)");
  witt->add_option("--ghost", witt_args.ghost, "ghost vector for unghost, inline JSON or file");
  witt->add_option("-N,--precision", witt_args.precision, "precision")->check(CLI::PositiveNumber);
  witt->add_option("--n", witt_args.index, "Frobenius index");

  std::string spec_arg;
  std::size_t precision = 0;
  std::string route = "newton";
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta function Z(X, t)");
  zeta_cmd->add_option("--spec", spec_arg, "variety spec: inline JSON, file or builtin name")->required();
  zeta_cmd->add_option("-N,--precision", precision, "t-precision")->required()->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--route", route, "newton (ghost inverse of counts) or euler (closed points)")
      ->check(CLI::IsMember({"newton", "euler"}));

  std::size_t power = 0;
  bool as_ghost = false;
  auto* sym = app.add_subcommand("sym", "zeta function of the n-th symmetric power");
  sym->add_option("--spec", spec_arg, "variety spec")->required();
  sym->add_option("-n", power, "symmetric power")->required();
  sym->add_option("-N,--precision", precision, "t-precision")->required()->check(CLI::PositiveNumber);
  sym->add_flag("--ghost", as_ghost, "print ghost coordinates (point counts) instead");

  std::size_t outer = 0;
  auto* series = app.add_subcommand("series", "sum_n Z(Sym^n X, t) u^n in W_M(W_N(Z))");
  series->add_option("--spec", spec_arg, "variety spec")->required();
  series->add_option("-M", outer, "u-precision")->required()->check(CLI::PositiveNumber);
  series->add_option("-N,--precision", precision, "t-precision")->required()->check(CLI::PositiveNumber);

  std::string series_doc;
  std::optional<std::size_t> sym_power;
  std::size_t dmax = 0;
  auto* reconstruct = app.add_subcommand("reconstruct", "rational function num/den matching a zeta series");
  auto* rspec = reconstruct->add_option("--spec", spec_arg, "variety spec");
  auto* rseries = reconstruct->add_option("--series", series_doc, "Witt vector, inline JSON or file");
  rspec->excludes(rseries);
  reconstruct->add_option("--sym", sym_power, "use Sym^n of the spec")->needs(rspec);
  reconstruct->add_option("-N,--precision", precision, "t-precision for --spec (default 2*dmax+1)")->needs(rspec);
  reconstruct->add_option("--dmax", dmax, "degree bound")->required();

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "run acceptance suites");
  check->add_option("suite", suite, "all, a criterion number or a criterion name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(error_object("malformed", e.what()), kMalformed);
  }

  try {
    Json out;
    int code = kOk;
    if (*witt) {
      out = cmd_witt(witt_args);
    } else if (*zeta_cmd) {
      const VarietySpec spec = read_spec(spec_arg);
      const PointCounts counts = point_counts(spec, precision, counting_options());
      out = io::witt_to_json(route == "euler" ? euler_product_zeta(counts, precision)
                                              : zeta_from_counts(counts, precision));
    } else if (*sym) {
      const W z = sym_zeta(read_spec(spec_arg), power, precision, counting_options());
      out = as_ghost ? io::ghost_to_json(ghost(z)) : io::witt_to_json(z);
    } else if (*series) {
      out = io::witt_to_json(zeta_generating_series(read_spec(spec_arg), outer, precision, counting_options()));
    } else if (*reconstruct) {
      W z = W::zero(Integer(1), 1);
      if (!series_doc.empty()) {
        z = io::witt_from_json<W>(read_document(series_doc));
      } else if (!spec_arg.empty()) {
        const std::size_t n = precision > 0 ? precision : 2 * dmax + 1;
        const VarietySpec spec = read_spec(spec_arg);
        z = sym_power ? sym_zeta(spec, *sym_power, n, counting_options()) : zeta(spec, n, counting_options());
      } else {
        throw InputError("reconstruct needs --spec or --series");
      }
      const RationalFunction f = rational_reconstruct(z, dmax);
      out = io::rational_to_json(f);
      if (const auto factored = factored_form(f)) out["factored"] = *factored;
    } else if (*check) {
      Json results = Json::array();
      bool all_passed = true;
      for (const auto* c : acceptance::select(suite)) {
        const acceptance::Result r = acceptance::run(*c);
        all_passed = all_passed && r.passed;
        results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      out = Json{{"suite", suite}, {"passed", all_passed}, {"results", std::move(results)}};
      if (!all_passed) code = kFailed;
    }
    std::cout << out.dump(2) << "\n";
    return code;
  } catch (const IntegralityError& e) {
    Json err = error_object("integrality", e.what());
    err["error"]["degree"] = e.degree();
    err["error"]["residue"] = e.residue();
    return report(err, kIntegrality);
  } catch (const BudgetError& e) {
    Json err = error_object("budget", e.what());
    err["error"]["required"] = e.required();
    err["error"]["budget"] = e.budget();
    return report(err, kBudget);
  } catch (const PrecisionError& e) {
    Json err = error_object("precision", e.what());
    err["error"]["required"] = e.required();
    err["error"]["available"] = e.available();
    return report(err, kPrecision);
  } catch (const ReconstructionError& e) {
    return report(error_object("reconstruction", e.what()), kPrecision);
  } catch (const InputError& e) {
    return report(error_object("malformed", e.what()), kMalformed);
  } catch (const InvariantError& e) {
    return report(error_object("invariant", e.what()), kFailed);
  } catch (const std::exception& e) {
    return report(error_object("internal", e.what()), kFailed);
  }
}
