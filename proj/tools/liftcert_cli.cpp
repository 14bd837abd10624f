#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftcert/certificate.hpp"

namespace {

using namespace liftcert;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int usage_error(const std::string& message) {
  nlohmann::json err = {{"error", message}, {"exit_code", kExitUsage}};
  std::cerr << err.dump() << '\n';
  return kExitUsage;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list \"" + s + "\"");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (!s.empty() && s.back() == ',') throw UsageError("trailing comma in \"" + s + "\"");
  return out;
}

Integer parse_integer(const std::string& s) {
  Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) throw UsageError("not an integer: \"" + s + "\"");
  return x;
}

PrimeSet parse_primes(const std::string& s) {
  std::vector<std::uint64_t> ps;
  for (const auto& item : split_commas(s)) {
    const Integer p = parse_integer(item);
    if (p < 2 || !p.fits_ulong_p()) throw UsageError("not a prime: " + item);
    ps.push_back(p.get_ui());
  }
  try {
    return PrimeSet(std::move(ps));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TorusMap parse_matrix(const std::string& s) {
  const auto items = split_commas(s);
  if (items.size() != 4) throw UsageError("--matrix needs four comma-separated entries a,b,c,d");
  try {
    return TorusMap(parse_integer(items[0]), parse_integer(items[1]), parse_integer(items[2]),
                    parse_integer(items[3]));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_at_least_two(std::uint64_t v, const char* flag) {
  if (v < 2) throw UsageError(std::string(flag) + " must be at least 2");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + out_path + " for writing");
  f << text;
}

int exit_for(Verdict v) { return v == Verdict::kFail ? kExitFail : kExitPass; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for conjugate Anosov lifts through non-equivalent abelian covers"};
  app.require_subcommand(1);

  std::uint64_t n = 0, m = 0;
  std::string a_text, b_text, matrix_text, out_path, primes_text;
  std::vector<std::string> matrix_list;
  std::size_t depth = 10;
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "Certify one instance (n, m, A, B) with an Anosov map");
  verify->add_option("--n", n, "order of the first cyclic factor")->required();
  verify->add_option("--m", m, "order of the second cyclic factor")->required();
  verify->add_option("--A", a_text, "comma-separated primes of A (default empty)");
  verify->add_option("--B", b_text, "comma-separated primes of B (default empty)");
  verify->add_option("--matrix", matrix_text, "torus map a,b,c,d with ad - bc = 1");
  verify->add_option("--K", depth, "trace table depth");
  verify->add_flag("--json", as_json, "emit the certificate as JSON");
  verify->add_option("--out", out_path, "write output to FILE instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "List the admissible (A, B) for (n, m)");
  enumerate->add_option("--n", n, "order of the first cyclic factor")->required();
  enumerate->add_option("--m", m, "order of the second cyclic factor")->required();
  enumerate->add_flag("--json", as_json, "emit a JSON array");
  enumerate->add_option("--out", out_path, "write output to FILE instead of stdout");

  auto* family = app.add_subcommand("family", "Certify the k-prime family and a set of maps");
  family->add_option("--primes", primes_text, "comma-separated distinct primes")->required();
  family->add_option("--matrix", matrix_list, "torus map a,b,c,d (repeatable)");
  family->add_option("--K", depth, "trace table depth");
  family->add_flag("--json", as_json, "emit the certificate as JSON");
  family->add_option("--out", out_path, "write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  try {
    if (verify->parsed()) {
      require_at_least_two(n, "--n");
      require_at_least_two(m, "--m");
      VerifyInput in;
      in.n = n;
      in.m = m;
      in.a = parse_primes(a_text);
      in.b = parse_primes(b_text);
      if (!matrix_text.empty()) in.matrix = parse_matrix(matrix_text).matrix();
      in.k = depth;
      const Certificate cert = run_verify(in);
      emit(as_json ? dump(to_json_value(cert)) : render_text(cert), out_path);
      return exit_for(cert.verdict);
    }
    if (enumerate->parsed()) {
      require_at_least_two(n, "--n");
      require_at_least_two(m, "--m");
      const auto pairs = enumerate_admissible(n, m);
      emit(as_json ? dump(enumeration_json(pairs)) : render_enumeration(n, m, pairs), out_path);
      return kExitPass;
    }
    if (family->parsed()) {
      const PrimeSet primes = parse_primes(primes_text);
      if (primes.empty()) throw UsageError("--primes must name at least one prime");
      std::vector<TorusMap> maps;
      for (const auto& s : matrix_list) {
        maps.push_back(parse_matrix(s));
        if (!is_anosov(maps.back())) throw UsageError("matrix " + s + " is not Anosov");
      }
      const FamilyCertificate cert = run_family(primes, maps, depth);
      emit(as_json ? dump(to_json_value(cert)) : render_text(cert), out_path);
      return exit_for(cert.verdict);
    }
  } catch (const UsageError& e) {
    return usage_error(e.what());
  } catch (const std::overflow_error& e) {
    return usage_error(std::string("input too large: ") + e.what());
  }
  return kExitUsage;
}
